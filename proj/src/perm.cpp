#include "dade/perm.hpp"

#include <cctype>
#include <sstream>

namespace dade {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("cycle notation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw DomainError("cycle notation: expected point index in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw DomainError("cycle notation: unterminated cycle");
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  Perm p = Perm::identity(degree);
  for (const auto& cyc : cycles) {
    std::vector<char> seen(degree, 0);
    for (size_t j = 0; j < cyc.size(); ++j) {
      int a = cyc[j];
      if (a < 0 || a >= degree) throw DomainError("cycle notation: point out of range");
      if (seen[a]) throw DomainError("cycle notation: repeated point in a cycle");
      seen[a] = 1;
      p.img[a] = cyc[(j + 1) % cyc.size()];
    }
  }
  // product of disjoint cycles of an identity start is always a bijection
  return p;
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream out;
  std::vector<char> done(p.degree(), 0);
  bool any = false;
  for (int s = 0; s < p.degree(); ++s) {
    if (done[s] || p(s) == s) continue;
    any = true;
    out << '(';
    int x = s;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      done[x] = 1;
      x = p(x);
      first = false;
    } while (x != s);
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

}  // namespace dade
