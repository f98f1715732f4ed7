#include "qlprop/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qlprop {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n ||
      std::any_of(leq_.begin(), leq_.end(),
                  [n](const auto& row) { return row.size() != n; })) {
    throw NotAPartialOrder("order table does not match the element count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) {
      throw NotAPartialOrder("not reflexive at '" + labels_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_[i][j] && leq_[j][i]) {
        throw NotAPartialOrder("antisymmetry fails for '" + labels_[i] +
                               "' and '" + labels_[j] + "'");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[j][k] && !leq_[i][k]) {
          throw NotAPartialOrder("transitivity fails for '" + labels_[i] +
                                 "' <= '" + labels_[j] + "' <= '" +
                                 labels_[k] + "'");
        }
      }
    }
  }
}

bool FinitePoset::covers(std::size_t j, std::size_t i) const {
  if (!lt(i, j)) return false;
  for (std::size_t k = 0; k < size(); ++k) {
    if (lt(i, k) && lt(k, j)) return false;
  }
  return true;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < size() && below_all; ++j) {
      below_all = leq(i, j);
    }
    if (below_all) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool above_all = true;
    for (std::size_t j = 0; j < size() && above_all; ++j) {
      above_all = leq(j, i);
    }
    if (above_all) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a,
                                             std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!leq(k, a) || !leq(k, b)) continue;
    if (!best || leq(*best, k)) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < size(); ++k) {
    if (leq(k, a) && leq(k, b) && !leq(k, *best)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a,
                                             std::size_t b) const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!leq(a, k) || !leq(b, k)) continue;
    if (!best || leq(k, *best)) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < size(); ++k) {
    if (leq(a, k) && leq(b, k) && !leq(*best, k)) return std::nullopt;
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::hasse_edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (covers(j, i)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

// ---------------------------------------------------------------------------

namespace {

using Table = std::vector<std::vector<std::size_t>>;

Table derive_table(const FinitePoset& p, bool meet) {
  const std::size_t n = p.size();
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto r = meet ? p.meet(i, j) : p.join(i, j);
      if (!r) {
        throw MeetJoinMissing(std::string(meet ? "meet" : "join") + " of '" +
                              p.label(i) + "' and '" + p.label(j) +
                              "' does not exist");
      }
      t[i][j] = *r;
    }
  }
  return t;
}

}  // namespace

OrthoLattice::OrthoLattice(FinitePoset poset, std::vector<std::size_t> ortho)
    : poset_(std::move(poset)), ortho_(std::move(ortho)) {
  meet_ = derive_table(poset_, true);
  join_ = derive_table(poset_, false);
  init_bounds();
}

OrthoLattice::OrthoLattice(FinitePoset poset, Table meet, Table join,
                           std::vector<std::size_t> ortho)
    : poset_(std::move(poset)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      ortho_(std::move(ortho)) {
  const std::size_t n = poset_.size();
  if (meet_.size() != n || join_.size() != n) {
    throw NotAnOrthoLattice("operation tables do not match the element count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset_.meet(i, j) != std::optional<std::size_t>(meet_[i][j])) {
        throw NotAnOrthoLattice("meet of '" + poset_.label(i) + "' and '" +
                                poset_.label(j) + "' is not their glb");
      }
      if (poset_.join(i, j) != std::optional<std::size_t>(join_[i][j])) {
        throw NotAnOrthoLattice("join of '" + poset_.label(i) + "' and '" +
                                poset_.label(j) + "' is not their lub");
      }
    }
  }
  init_bounds();
}

void OrthoLattice::init_bounds() {
  if (ortho_.size() != poset_.size()) {
    throw NotAnOrthoLattice("ortho table does not match the element count");
  }
  for (std::size_t x : ortho_) {
    if (x >= poset_.size()) throw NotAnOrthoLattice("ortho table out of range");
  }
  auto b = poset_.bottom();
  auto t = poset_.top();
  if (!b || !t) throw MeetJoinMissing("lattice is not bounded");
  bottom_ = *b;
  top_ = *t;
}

// ---------------------------------------------------------------------------
// Law checks

bool LawResult::has_witness(const std::vector<std::size_t>& tuple) const {
  return std::find(witnesses.begin(), witnesses.end(), tuple) !=
         witnesses.end();
}

bool LawReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) {
    return l.passed || !l.asserted;
  });
}

const LawResult& LawReport::law(std::string_view name) const {
  for (const LawResult& l : laws) {
    if (l.name == name) return l;
  }
  throw std::out_of_range("no law named " + std::string(name));
}

namespace {

void fail(LawResult& r, std::vector<std::size_t> tuple) {
  r.passed = false;
  ++r.failures;
  r.witnesses.push_back(std::move(tuple));
}

std::vector<std::size_t> atoms_of(const FinitePoset& p, std::size_t bottom) {
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.covers(i, bottom)) atoms.push_back(i);
  }
  return atoms;
}

}  // namespace

LawReport check_boolean(const FinitePoset& p) {
  const Table meet = derive_table(p, true);
  const Table join = derive_table(p, false);
  const std::size_t n = p.size();
  LawReport report;

  LawResult bounded{"bounded"};
  auto bottom = p.bottom();
  auto top = p.top();
  if (!bottom || !top) fail(bounded, {});
  report.laws.push_back(bounded);

  LawResult dist_meet{"distributive: x meet (a join b)"};
  LawResult dist_join{"distributive: x join (a meet b)"};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (meet[x][join[a][b]] != join[meet[x][a]][meet[x][b]]) {
          fail(dist_meet, {x, a, b});
        }
        if (join[x][meet[a][b]] != meet[join[x][a]][join[x][b]]) {
          fail(dist_join, {x, a, b});
        }
      }
    }
  }
  report.laws.push_back(dist_meet);
  report.laws.push_back(dist_join);

  // Every element has exactly one complement.
  LawResult complemented{"uniquely complemented"};
  if (bottom && top) {
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t count = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (meet[a][c] == *bottom && join[a][c] == *top) ++count;
      }
      if (count != 1) fail(complemented, {a});
    }
  } else {
    fail(complemented, {});
  }
  report.laws.push_back(complemented);
  return report;
}

LawReport check_ortho_modular(const OrthoLattice& l) {
  const FinitePoset& p = l.poset();
  const std::size_t n = l.size();
  const std::size_t zero = l.bottom(), one = l.top();
  LawReport report;

  LawResult involution{"ortho involution"};
  LawResult reversing{"ortho order-reversing"};
  LawResult non_contradiction{"complement: a meet a' = 0"};
  LawResult excluded_middle{"complement: a join a' = 1"};
  for (std::size_t a = 0; a < n; ++a) {
    if (l.ortho(l.ortho(a)) != a) fail(involution, {a});
    if (l.meet(a, l.ortho(a)) != zero) fail(non_contradiction, {a});
    if (l.join(a, l.ortho(a)) != one) fail(excluded_middle, {a});
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq(a, b) && !p.leq(l.ortho(b), l.ortho(a))) {
        fail(reversing, {a, b});
      }
    }
  }
  report.laws.push_back(involution);
  report.laws.push_back(reversing);
  report.laws.push_back(non_contradiction);
  report.laws.push_back(excluded_middle);

  // a <= b implies b = a join (a' meet b).
  LawResult orthomodular{"orthomodular"};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq(a, b) && l.join(a, l.meet(l.ortho(a), b)) != b) {
        fail(orthomodular, {a, b});
      }
    }
  }
  report.laws.push_back(orthomodular);

  const std::vector<std::size_t> atoms = atoms_of(p, zero);
  LawResult atomic{"atomic"};
  LawResult atomistic{"atomistic"};
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t acc = zero;
    bool dominates_atom = false;
    for (std::size_t at : atoms) {
      if (p.leq(at, a)) {
        dominates_atom = true;
        acc = l.join(acc, at);
      }
    }
    if (a != zero && !dominates_atom) fail(atomic, {a});
    if (acc != a) fail(atomistic, {a});
  }
  report.laws.push_back(atomic);
  report.laws.push_back(atomistic);

  // For an atom q and element a with a meet q = 0, a join q covers a.
  LawResult covering{"covering"};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t q : atoms) {
      if (l.meet(a, q) == zero && !p.covers(l.join(a, q), a)) {
        fail(covering, {a, q});
      }
    }
  }
  report.laws.push_back(covering);

  // a <= c implies a join (b meet c) = (a join b) meet c.
  LawResult modular{"modular"};
  modular.asserted = false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!p.leq(a, c)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) {
          fail(modular, {a, b, c});
        }
      }
    }
  }
  report.laws.push_back(modular);
  return report;
}

OrthoLattice power_set_lattice(std::size_t n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m < count; ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (std::size_t{1} << i)) {
        if (s.size() > 1) s += ",";
        s += std::to_string(i);
      }
    }
    labels.push_back(s + "}");
  }
  FinitePoset p = build_poset(std::move(labels), [](std::size_t a,
                                                    std::size_t b) {
    return (a & ~b) == 0;
  });
  std::vector<std::size_t> ortho(count);
  for (std::size_t m = 0; m < count; ++m) ortho[m] = (count - 1) & ~m;
  return OrthoLattice(std::move(p), std::move(ortho));
}

OrthoLattice hexagon_lattice() {
  // 0, a, b, b', a', 1 with a < b and b' < a'.
  enum { kZero, kA, kB, kBp, kAp, kOne };
  std::vector<std::vector<bool>> leq(6, std::vector<bool>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    leq[i][i] = true;
    leq[kZero][i] = true;
    leq[i][kOne] = true;
  }
  leq[kA][kB] = true;
  leq[kBp][kAp] = true;
  FinitePoset p({"0", "a", "b", "b'", "a'", "1"}, std::move(leq));
  return OrthoLattice(std::move(p), {kOne, kAp, kBp, kB, kA, kZero});
}

// ---------------------------------------------------------------------------

std::optional<std::vector<std::size_t>> order_isomorphic(const FinitePoset& a,
                                                         const FinitePoset& b,
                                                         std::size_t cap) {
  if (a.size() > cap || b.size() > cap) {
    throw SearchCapExceeded("isomorphism search is capped at " +
                            std::to_string(cap) + " elements");
  }
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;

  // Elements can only map to elements with the same number of elements
  // below and above them.
  auto signature = [](const FinitePoset& p, std::size_t i) {
    std::size_t down = 0, up = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      down += p.leq(k, i);
      up += p.leq(i, k);
    }
    return std::make_pair(down, up);
  };
  std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }

  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a.leq(k, i) == b.leq(map[k], c) && a.leq(i, k) == b.leq(c, map[k]);
      }
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

std::string export_dot(const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph {\n  rankdir=BT;\n";
  for (const std::string& l : p.labels()) out << "  " << quoted(l) << ";\n";
  for (const auto& [lo, hi] : p.hasse_edges()) {
    out << "  " << quoted(p.label(lo)) << " -> " << quoted(p.label(hi))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qlprop
