#include "groupext/presentation.hpp"

#include <cctype>

#include "groupext/families.hpp"
#include "groupext/numeric.hpp"

namespace groupext {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos, std::string("expected ") + what);
  }

  int integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(pos, "expected an integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw ParseError(pos, "integer too large");
      ++pos;
    }
    return static_cast<int>(v);
  }
};

struct Parser {
  Lexer lex;

  GroupSpec parse() {
    GroupSpec s = product();
    if (!lex.eof()) throw ParseError(lex.pos, "unexpected trailing input");
    return s;
  }

  GroupSpec product() {
    GroupSpec left = term();
    while (true) {
      size_t save = lex.pos;
      lex.skip_ws();
      // "x" is a direct product only when not the "x|" operator
      if (lex.pos < lex.text.size() && lex.text[lex.pos] == 'x' &&
          (lex.pos + 1 >= lex.text.size() || lex.text[lex.pos + 1] != '|')) {
        ++lex.pos;
        GroupSpec right = term();
        GroupSpec node;
        node.kind = GroupSpec::Kind::Direct;
        node.children.push_back(std::move(left));
        node.children.push_back(std::move(right));
        left = std::move(node);
      } else {
        lex.pos = save;
        break;
      }
    }
    return left;
  }

  GroupSpec term() {
    GroupSpec left = atom();
    lex.skip_ws();
    if (lex.pos + 1 < lex.text.size() && lex.text[lex.pos] == 'x' &&
        lex.text[lex.pos + 1] == '|') {
      lex.pos += 2;
      GroupSpec quot = atom();
      GroupSpec node;
      node.kind = GroupSpec::Kind::Semidirect;
      node.children.push_back(std::move(left));
      node.children.push_back(std::move(quot));
      lex.expect('[', "'[' before the action list");
      node.action.push_back(lex.integer());
      while (lex.accept(',')) node.action.push_back(lex.integer());
      lex.expect(']', "']' after the action list");
      return node;
    }
    return left;
  }

  GroupSpec atom() {
    lex.skip_ws();
    size_t at = lex.pos;
    if (lex.accept('(')) {
      GroupSpec inner = product();
      lex.expect(')', "')'");
      return inner;
    }
    if (lex.pos < lex.text.size() && lex.text.compare(lex.pos, 3, "PSL") == 0) {
      lex.pos += 3;
      lex.expect('(', "'(' after PSL");
      int two = lex.integer();
      if (two != 2) throw ParseError(at, "only PSL(2,p) is supported");
      lex.expect(',', "',' inside PSL(2,p)");
      int p = lex.integer();
      lex.expect(')', "')' after PSL(2,p)");
      GroupSpec s;
      s.kind = GroupSpec::Kind::Psl2;
      s.param = p;
      return s;
    }
    if (lex.pos < lex.text.size()) {
      char c = lex.text[lex.pos];
      GroupSpec s;
      switch (c) {
        case 'Z': s.kind = GroupSpec::Kind::Z; break;
        case 'D': s.kind = GroupSpec::Kind::D; break;
        case 'Q': s.kind = GroupSpec::Kind::Q; break;
        case 'A': s.kind = GroupSpec::Kind::A; break;
        case 'S': s.kind = GroupSpec::Kind::S; break;
        default:
          throw ParseError(lex.pos, "expected an atom: Z, D, Q, A, S, PSL(2,p) or '('");
      }
      ++lex.pos;
      s.param = lex.integer();
      return s;
    }
    throw ParseError(lex.pos, "expected an atom: Z, D, Q, A, S, PSL(2,p) or '('");
  }
};

// Collects the cyclic factor orders of a kernel built from Z atoms and direct
// products of them, left to right; empty when the shape is anything else.
bool cyclic_factors(const GroupSpec& s, std::vector<int>& out) {
  if (s.kind == GroupSpec::Kind::Z) {
    out.push_back(s.param);
    return true;
  }
  if (s.kind == GroupSpec::Kind::Direct)
    return cyclic_factors(s.children[0], out) && cyclic_factors(s.children[1], out);
  return false;
}

}  // namespace

GroupSpec parse_presentation(std::string_view text) {
  Parser p{Lexer{text, 0}};
  return p.parse();
}

std::string to_string(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  auto atom_str = [](const GroupSpec& a) {
    std::string inner = to_string(a);
    bool is_atom = a.kind != K::Direct && a.kind != K::Semidirect;
    return is_atom ? inner : "(" + inner + ")";
  };
  switch (s.kind) {
    case K::Z: return "Z" + std::to_string(s.param);
    case K::D: return "D" + std::to_string(s.param);
    case K::Q: return "Q" + std::to_string(s.param);
    case K::A: return "A" + std::to_string(s.param);
    case K::S: return "S" + std::to_string(s.param);
    case K::Psl2: return "PSL(2," + std::to_string(s.param) + ")";
    case K::Direct: {
      // right child needs parens when it is itself compound
      std::string l = s.children[0].kind == K::Direct || s.children[0].kind == K::Semidirect
                          ? atom_str(s.children[0])
                          : to_string(s.children[0]);
      return l + " x " + atom_str(s.children[1]);
    }
    case K::Semidirect: {
      std::string a;
      for (size_t i = 0; i < s.action.size(); ++i) {
        if (i) a += ",";
        a += std::to_string(s.action[i]);
      }
      return atom_str(s.children[0]) + " x| " + atom_str(s.children[1]) + " [" + a + "]";
    }
  }
  return "?";
}

Group build_from_spec(const GroupSpec& s, int cap) {
  using K = GroupSpec::Kind;
  try {
    switch (s.kind) {
      case K::Z: return cyclic_group(s.param, cap);
      case K::D: return dihedral_group(s.param, cap);
      case K::Q: return quaternion_group(s.param, cap);
      case K::A: return alternating_group(s.param, cap);
      case K::S: return symmetric_group(s.param, cap);
      case K::Psl2: return psl2_group(s.param, cap);
      case K::Direct: {
        Group a = build_from_spec(s.children[0], cap);
        Group b = build_from_spec(s.children[1], cap);
        return direct_product(a, b, cap);
      }
      case K::Semidirect: {
        const GroupSpec& kspec = s.children[0];
        const GroupSpec& qspec = s.children[1];
        if (qspec.kind != K::Z)
          throw SemanticError("the quotient of a semidirect term must be a cyclic atom");
        Group kernel = build_from_spec(kspec, cap);
        Group quot = cyclic_group(qspec.param, cap);
        Automorphism act;
        std::vector<int> factors;
        if (cyclic_factors(kspec, factors)) {
          if (factors.size() != s.action.size())
            throw SemanticError("action needs one unit per cyclic factor (" +
                                std::to_string(factors.size()) + " expected)");
          act = multiplication_automorphism(factors, s.action);
        } else if (kspec.kind == K::D) {
          if (s.action.size() != 2)
            throw SemanticError("a dihedral kernel takes an action pair t,s");
          int n = kspec.param / 2;
          int t = mod_norm(s.action[0], n);
          int ss = mod_norm(s.action[1], n);
          if (std::gcd(ss, n) != 1) throw SemanticError("dihedral action: s must be a unit mod n");
          act = to_automorphism(DihedralAut{n, t, ss});
        } else {
          throw SemanticError(
              "action annotations are only supported for cyclic, product-of-cyclic or "
              "dihedral kernels");
        }
        return semidirect_product(kernel, quot, ActionSpec{act}, cap);
      }
    }
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
  throw SemanticError("unreachable spec kind");
}

}  // namespace groupext
