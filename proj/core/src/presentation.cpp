#include "gecliff/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace gecliff {

std::size_t Presentation::generator_index(const std::string& g) const {
  auto it = std::find(generators.begin(), generators.end(), g);
  if (it == generators.end()) throw InvalidArgument("undeclared generator '" + g + "' in " + name);
  return static_cast<std::size_t>(it - generators.begin());
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators)
    if (!seen.insert(g).second) throw InvalidArgument("duplicate generator '" + g + "'");
  for (const auto& r : relators)
    for (const auto& l : r) {
      if (l.exp == 0) throw InvalidArgument("zero exponent in relator " + to_string(r));
      generator_index(l.gen);
    }
  if (model)
    for (const auto& g : generators)
      if (!model->count(g)) throw MissingModel("no image for generator '" + g + "'");
}

Relator free_reduce(const Relator& r) {
  Relator out;
  for (const auto& l : r) {
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else if (l.exp != 0) {
      out.push_back(l);
    }
  }
  return out;
}

std::string to_string(const Relator& r) {
  if (r.empty()) return "1";
  std::string s;
  for (const auto& l : r) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

namespace {

Letter g(const std::string& name, int e = 1) { return Letter{name, e}; }

Relator power(const Relator& r, int k) {
  Relator out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), r.begin(), r.end());
  return out;
}

Relator cat(Relator x, const Relator& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

Relator commutator(const std::string& x, const std::string& y) { return {g(x), g(y), g(x, -1), g(y, -1)}; }

std::string idx(int h) { return "i" + std::to_string(h); }

std::vector<CliffordElement> clifford_units(int n) {
  std::vector<CliffordElement> u;
  for (int h = 1; h < n; ++h) u.push_back(CliffordElement::generator(n, h));
  return u;
}

Presentation lemma53(int n) {
  Presentation p;
  p.name = "lemma53(n=" + std::to_string(n) + ")";
  const std::string J = "J", A = "A", T1 = "T1";
  auto T = [](int h) { return "T_" + idx(h); };
  auto L = [](int h) { return "L_" + idx(h); };
  p.generators = {J, A, T1};
  for (int h = 1; h < n; ++h) p.generators.push_back(T(h));
  for (int h = 1; h < n; ++h) p.generators.push_back(L(h));
  auto& R = p.relators;
  const Relator Jinv{g(J, -1)};
  // (i)
  R.push_back({g(J, 2)});
  for (const auto& x : p.generators)
    if (x != J) R.push_back(commutator(J, x));
  // (ii)
  R.push_back({g(A, 2), g(J, -1)});
  for (int h = 1; h < n; ++h) {
    R.push_back({g(L(h), 2), g(J, -1)});
    R.push_back(cat(power({g(A), g(L(h))}, 2), Jinv));
  }
  // (iii)
  R.push_back(power({g(T1), g(A)}, 3));
  for (int h = 1; h < n; ++h) R.push_back(power({g(T(h)), g(L(h)), g(A)}, 3));
  // (iv)
  for (int h = 1; h < n; ++h) R.push_back(commutator(T1, T(h)));
  for (int h = 1; h < n; ++h)
    for (int k = h + 1; k < n; ++k) R.push_back(commutator(T(h), T(k)));
  // (v)
  if (n >= 2) R.push_back(cat(power({g(L(1), -1), g(T1)}, 2), Jinv));
  for (int h = 1; h < n; ++h) R.push_back(cat(power({g(L(h), -1), g(T(h))}, 2), Jinv));
  // (vi)
  for (int h = 2; h < n; ++h)
    R.push_back({g(L(1)), g(T1), g(L(1)), g(L(h), -1), g(T1, -1), g(L(h), -1)});
  // (vii)
  for (int h = 1; h < n; ++h)
    for (int k = 1; k < n; ++k)
      if (h != k) R.push_back(commutator(L(h), T(k)));
  // (viii)
  for (int h = 1; h < n; ++h)
    for (int k = h + 1; k < n; ++k) R.push_back(cat(power({g(L(h)), g(L(k))}, 2), Jinv));
  p.model = lemma_model("lemma53", CliffordElement::scalar(n, 1), clifford_units(n));
  return p;
}

Presentation lemma54(int n) {
  Presentation p;
  p.name = "lemma54(n=" + std::to_string(n) + ")";
  const std::string j = "j", a = "a", c = "c";
  auto b = [](int h) { return "b_" + idx(h); };
  auto d = [](int h) { return "d_" + idx(h); };
  p.generators = {j, a};
  for (int h = 1; h < n; ++h) p.generators.push_back(b(h));
  p.generators.push_back(c);
  for (int h = 1; h < n; ++h) p.generators.push_back(d(h));
  auto& R = p.relators;
  const Relator jinv{g(j, -1)};
  R.push_back({g(j, 2)});
  for (const auto& x : p.generators)
    if (x != j) R.push_back(commutator(j, x));
  R.push_back({g(a, 2), g(j, -1)});
  for (int h = 1; h < n; ++h) R.push_back({g(b(h), 2), g(j, -1)});
  for (int h = 1; h < n; ++h) R.push_back(cat(power({g(a), g(b(h))}, 2), jinv));
  R.push_back({g(c, 3)});
  for (int h = 1; h < n; ++h) R.push_back({g(d(h), 3)});
  for (int h = 1; h < n; ++h) R.push_back(cat(power({g(b(h)), g(c)}, 2), jinv));
  for (int h = 1; h < n; ++h) R.push_back(cat(power({g(a), g(d(h))}, 2), jinv));
  for (int h = 1; h < n; ++h) R.push_back(cat(power({g(d(h)), g(c, -1)}, 2), jinv));
  for (int h = 1; h < n; ++h)
    for (int k = h + 1; k < n; ++k) R.push_back(cat(power({g(b(h)), g(b(k))}, 2), jinv));
  for (int h = 1; h < n; ++h)
    for (int k = 1; k < n; ++k)
      if (h != k) R.push_back(cat(power({g(b(h)), g(d(k))}, 2), jinv));
  for (int h = 1; h < n; ++h)
    for (int k = h + 1; k < n; ++k) R.push_back(cat(power({g(d(h)), g(d(k), -1)}, 2), jinv));
  p.model = lemma_model("lemma54", CliffordElement::scalar(n, 1), clifford_units(n));
  return p;
}

Presentation sl2z_classic() {
  Presentation p;
  p.name = "sl2z-classic";
  p.generators = {"a", "c"};
  p.relators = {{g("a", 4)}, {g("c", 6)}, {g("a", 2), g("c", -3)}};
  const auto one = CliffordElement::scalar(1, 1);
  p.model = MatrixModel<CliffordElement>{{"a", elementary(zero_like(one), one)}, {"c", elementary(one, one)}};
  return p;
}

}  // namespace

const std::vector<std::string>& builtin_kinds() {
  static const std::vector<std::string> k{"lemma53", "lemma54", "sl2z-classic"};
  return k;
}

Presentation builtin_presentation(const std::string& kind, int n) {
  if (kind == "sl2z-classic") return sl2z_classic();
  if (kind != "lemma53" && kind != "lemma54") throw InvalidArgument("unknown presentation kind '" + kind + "'");
  if (n < 1) throw InvalidArgument("presentation needs n >= 1");
  return kind == "lemma53" ? lemma53(n) : lemma54(n);
}

VerifyReport verify_presentation(const Presentation& p) {
  if (!p.model) throw MissingModel("presentation " + p.name + " has no matrix model");
  const auto& m = *p.model;
  if (m.empty()) throw MissingModel("empty matrix model");
  const auto one = CliffordElement::scalar(m.begin()->second.a.dimension(), 1);
  return verify_with_model(p, m, one);
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix out;
  for (const auto& r : p.relators) {
    IntVector row(p.generators.size(), 0);
    for (const auto& l : r) row[p.generator_index(l.gen)] += l.exp;
    out.push_back(std::move(row));
  }
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  return abelian_invariants(exponent_matrix(p), p.generators.size());
}

bool abelian_image_is_zero(const Presentation& p, const Relator& word) {
  IntLattice lat(p.generators.size());
  for (auto& row : exponent_matrix(p)) lat.insert(std::move(row));
  IntVector v(p.generators.size(), 0);
  for (const auto& l : word) v[p.generator_index(l.gen)] += l.exp;
  return lat.contains(std::move(v));
}

namespace {

Presentation sub_presentation(const Presentation& p, const std::string& name, const std::set<std::string>& gens) {
  Presentation q;
  q.name = name;
  for (const auto& x : p.generators)
    if (gens.count(x)) q.generators.push_back(x);
  for (const auto& r : p.relators) {
    const bool inside = std::all_of(r.begin(), r.end(), [&](const Letter& l) { return gens.count(l.gen) != 0; });
    if (inside) q.relators.push_back(r);
  }
  if (p.model) {
    MatrixModel<CliffordElement> m;
    for (const auto& x : q.generators) m.emplace(x, p.model->at(x));
    q.model = std::move(m);
  }
  return q;
}

std::set<std::string> set_union(const std::set<std::string>& x, const std::set<std::string>& y) {
  std::set<std::string> out = x;
  out.insert(y.begin(), y.end());
  return out;
}

}  // namespace

AmalgamSplit amalgam_split(const Presentation& p, Partition partition) {
  p.validate();
  for (const auto& x : partition.c) {
    partition.a.erase(x);
    partition.b.erase(x);
  }
  for (const auto& x : partition.a)
    if (partition.b.count(x)) throw PartitionNotDisjoint("generator '" + x + "' lies in both A and B");
  const std::set<std::string> all(p.generators.begin(), p.generators.end());
  const auto covered = set_union(set_union(partition.a, partition.b), partition.c);
  for (const auto& x : covered)
    if (!all.count(x)) throw InvalidArgument("partition names undeclared generator '" + x + "'");
  for (const auto& x : all)
    if (!covered.count(x)) throw PartitionNotDisjoint("generator '" + x + "' is not covered by the partition");
  const auto ac = set_union(partition.a, partition.c);
  const auto bc = set_union(partition.b, partition.c);
  for (const auto& r : p.relators) {
    auto within = [&](const std::set<std::string>& s) {
      return std::all_of(r.begin(), r.end(), [&](const Letter& l) { return s.count(l.gen) != 0; });
    };
    if (!within(ac) && !within(bc))
      throw RelatorCrossesFactors("relator " + to_string(r) + " mixes A and B generators", to_string(r));
  }
  AmalgamSplit s;
  s.factor_ac = sub_presentation(p, p.name + "|AC", ac);
  s.factor_bc = sub_presentation(p, p.name + "|BC", bc);
  s.amalgamated_c = sub_presentation(p, p.name + "|C", partition.c);
  s.partition = std::move(partition);
  return s;
}

Partition builtin_partition(int n) {
  if (n < 1) throw InvalidArgument("partition needs n >= 1");
  if (n == 1) return Partition{{"j", "a"}, {"j", "c"}, {"j"}};
  Partition p;
  p.c = {"j", "a", "c"};
  for (int h = 1; h <= n - 2; ++h) {
    p.c.insert("b_" + idx(h));
    p.c.insert("d_" + idx(h));
  }
  p.a = p.c;
  p.a.insert("b_" + idx(n - 1));
  p.b = p.c;
  p.b.insert("d_" + idx(n - 1));
  return p;
}

Presentation expected_amalgamated(int n) {
  if (n >= 2) return builtin_presentation("lemma54", n - 1);
  Presentation p;
  p.name = "C2";
  p.generators = {"j"};
  p.relators = {{g("j", 2)}};
  return p;
}

bool structurally_equal(const Presentation& x, const Presentation& y) {
  if (x.generators != y.generators) return false;
  auto canon = [](const Presentation& p) {
    std::vector<Relator> rs;
    for (const auto& r : p.relators) rs.push_back(free_reduce(r));
    std::sort(rs.begin(), rs.end());
    return rs;
  };
  return canon(x) == canon(y);
}

Presentation restrict_model(Presentation p) {
  if (p.model) {
    MatrixModel<CliffordElement> m;
    for (const auto& x : p.generators) {
      auto it = p.model->find(x);
      if (it != p.model->end()) m.emplace(x, it->second);
    }
    p.model = std::move(m);
  }
  return p;
}

std::string to_text(const Presentation& p) {
  std::string s = "gens:";
  for (const auto& x : p.generators) s += " " + x;
  s += '\n';
  for (const auto& r : p.relators) s += "rel: " + to_string(r) + '\n';
  return s;
}

namespace {

bool name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  p.name = "parsed";
  bool have_gens = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    line = line.substr(0, line.find('#'));
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, line_start + pos); };
    skip_ws();
    if (pos < line.size()) {
      const bool gens = line.substr(pos, 5) == "gens:";
      const bool rel = line.substr(pos, 4) == "rel:";
      if (!gens && !rel) throw fail("expected 'gens:' or 'rel:'");
      if (gens && have_gens) throw fail("duplicate 'gens:' line");
      if (rel && !have_gens) throw fail("'rel:' before 'gens:'");
      pos += gens ? 5 : 4;
      Relator r;
      while (true) {
        skip_ws();
        if (pos >= line.size()) break;
        const std::size_t start = pos;
        while (pos < line.size() && name_char(line[pos])) ++pos;
        if (pos == start) throw fail("expected a generator name");
        std::string nm(line.substr(start, pos - start));
        if (gens) {
          if (std::find(p.generators.begin(), p.generators.end(), nm) != p.generators.end())
            throw ParseError("duplicate generator '" + nm + "'", line_start + start);
          p.generators.push_back(std::move(nm));
          continue;
        }
        if (nm == "1" && r.empty()) continue;
        if (std::find(p.generators.begin(), p.generators.end(), nm) == p.generators.end())
          throw ParseError("undeclared generator '" + nm + "'", line_start + start);
        int e = 1;
        if (pos < line.size() && line[pos] == '^') {
          ++pos;
          const char* first = line.data() + pos;
          const char* last = line.data() + line.size();
          auto [ptr, ec] = std::from_chars(first, last, e);
          if (ec != std::errc() || e == 0) throw fail("expected a nonzero integer exponent");
          pos += static_cast<std::size_t>(ptr - first);
        }
        r.push_back(Letter{std::move(nm), e});
      }
      if (gens) have_gens = true;
      else p.relators.push_back(std::move(r));
    }
    line_start = line_end + 1;
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", 0);
  return p;
}

}  // namespace gecliff
