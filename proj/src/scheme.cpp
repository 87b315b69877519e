#include "curvesys/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "curvesys/error.hpp"

namespace curvesys {

Scheme::Scheme(std::size_t n, std::vector<Integer> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != entry_count(n_)) {
    throw InvalidShape("a " + std::to_string(n_) + "-scheme needs " + std::to_string(entry_count(n_)) +
                       " entries, got " + std::to_string(entries_.size()));
  }
}

Scheme Scheme::zero(std::size_t n) { return Scheme(n, std::vector<Integer>(entry_count(n))); }

Scheme Scheme::from_upper_rows(std::size_t n, const std::vector<std::vector<Integer>>& rows) {
  if (n > 0 && rows.size() != n - 1) throw InvalidShape("expected n-1 matrix rows");
  std::vector<Integer> entries(entry_count(n));
  for (CurveIndex i = 1; i < n; ++i) {
    const auto& row = rows[i - 1];
    if (row.size() != n - i) throw InvalidShape("matrix row " + std::to_string(i) + " has wrong length");
    for (CurveIndex j = i + 1; j <= n; ++j) entries[position(i, j)] = row[j - i - 1];
  }
  return Scheme(n, std::move(entries));
}

Integer Scheme::get(CurveIndex i, CurveIndex j) const {
  if (i == j || i < 1 || j < 1 || i > n_ || j > n_) {
    throw IndexError("invalid index pair (" + std::to_string(i) + "," + std::to_string(j) + ") for n=" +
                     std::to_string(n_));
  }
  return i < j ? upper(i, j) : Integer(-upper(j, i));
}

bool Scheme::has_zero_entry() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

bool Scheme::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

std::string to_string(const Scheme& s) {
  std::ostringstream out;
  out << '(';
  for (CurveIndex j = 2; j <= s.size(); ++j) {
    if (j > 2) out << "; ";
    for (CurveIndex i = 1; i < j; ++i) {
      if (i > 1) out << ", ";
      out << s.upper(i, j);
    }
  }
  out << ')';
  return out.str();
}

Scheme permute(const Scheme& s, std::span<const CurveIndex> sigma) {
  const std::size_t n = s.size();
  if (sigma.size() != n) throw InvalidPermutation("permutation length does not match scheme size");
  std::vector<bool> seen(n + 1, false);
  for (CurveIndex v : sigma) {
    if (v < 1 || v > n || seen[v]) throw InvalidPermutation("not a bijection of 1..n");
    seen[v] = true;
  }
  std::vector<Integer> entries(Scheme::entry_count(n));
  for (CurveIndex j = 2; j <= n; ++j)
    for (CurveIndex i = 1; i < j; ++i) entries[Scheme::position(i, j)] = s.get(sigma[i - 1], sigma[j - 1]);
  return Scheme(n, std::move(entries));
}

namespace {

template <typename Op>
Scheme entrywise(const Scheme& a, const Scheme& b, Op op) {
  if (a.size() != b.size()) throw InvalidShape("scheme sizes differ");
  std::vector<Integer> entries(a.entries().size());
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = op(a.entries()[k], b.entries()[k]);
  return Scheme(a.size(), std::move(entries));
}

}  // namespace

Scheme scheme_sum(const Scheme& a, const Scheme& b) {
  return entrywise(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}

Scheme scheme_difference(const Scheme& a, const Scheme& b) {
  return entrywise(a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); });
}

Scheme scale(const Scheme& s, const Integer& factor) {
  std::vector<Integer> entries(s.entries().begin(), s.entries().end());
  for (auto& e : entries) e *= factor;
  return Scheme(s.size(), std::move(entries));
}

Integer intersection(const CurveClass& a, const CurveClass& b) {
  if (a.is_empty() || b.is_empty()) return 0;
  return a.p() * b.q() - b.p() * a.q();
}

Scheme intersection_scheme(const CurveSystem& system) {
  const std::size_t n = system.size();
  std::vector<Integer> entries(Scheme::entry_count(n));
  for (CurveIndex j = 2; j <= n; ++j)
    for (CurveIndex i = 1; i < j; ++i) entries[Scheme::position(i, j)] = intersection(system[i - 1], system[j - 1]);
  return Scheme(n, std::move(entries));
}

std::string to_string(const CurveClass& c) {
  if (c.is_empty()) return "empty";
  return "(" + c.p().str() + "," + c.q().str() + ")";
}

// ---------------------------------------------------------------------------

bool ReductionLog::used_empty() const {
  return std::any_of(steps.begin(), steps.end(),
                     [](const ReductionStep& st) { return st.kind == ReductionStep::Kind::Empty; });
}

Scheme ReductionLog::replay() const {
  const std::size_t n = original_size;
  std::vector<std::vector<Integer>> m(n + 1, std::vector<Integer>(n + 1));
  std::vector<bool> present(n + 1, false);
  for (CurveIndex a = 1; a <= kept.size(); ++a) {
    present[kept[a - 1]] = true;
    for (CurveIndex b = 1; b <= kept.size(); ++b)
      if (a != b) m[kept[a - 1]][kept[b - 1]] = reduced.get(a, b);
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const CurveIndex r = it->removed;
    if (it->kind == ReductionStep::Kind::Duplicate) {
      for (CurveIndex x = 1; x <= n; ++x) {
        if (!present[x] || x == r) continue;
        m[r][x] = it->sign * m[it->duplicate_of][x];
        m[x][r] = -m[r][x];
      }
    }
    present[r] = true;
  }
  std::vector<Integer> entries(Scheme::entry_count(n));
  for (CurveIndex j = 2; j <= n; ++j)
    for (CurveIndex i = 1; i < j; ++i) entries[Scheme::position(i, j)] = m[i][j];
  return Scheme(n, std::move(entries));
}

CurveSystem ReductionLog::lift(const CurveSystem& reduced_system) const {
  if (reduced_system.size() != kept.size()) throw InvalidShape("reduced system has wrong length");
  std::vector<CurveClass> full(original_size + 1, CurveClass::empty());
  for (CurveIndex a = 1; a <= kept.size(); ++a) full[kept[a - 1]] = reduced_system[a - 1];
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->kind == ReductionStep::Kind::Duplicate) {
      const CurveClass& src = full[it->duplicate_of];
      full[it->removed] = it->sign > 0 ? src : src.negated();
    } else {
      full[it->removed] = CurveClass::empty();
    }
  }
  return CurveSystem(full.begin() + 1, full.end());
}

ZeroReduction reduce_zeros(const Scheme& s) {
  const std::size_t n = s.size();
  std::vector<CurveIndex> alive(n);
  for (CurveIndex i = 1; i <= n; ++i) alive[i - 1] = i;

  ReductionLog log;
  log.original_size = n;

  const auto row_matches = [&](CurveIndex a, CurveIndex b, int sign) {
    for (CurveIndex k : alive) {
      if (k == a || k == b) continue;
      if (s.get(a, k) != sign * s.get(b, k)) return false;
    }
    return true;
  };
  const auto row_zero = [&](CurveIndex a) {
    for (CurveIndex k : alive)
      if (k != a && s.get(a, k) != 0) return false;
    return true;
  };
  const auto drop = [&](CurveIndex r) { alive.erase(std::find(alive.begin(), alive.end(), r)); };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < alive.size() && !changed; ++x) {
      for (std::size_t y = x + 1; y < alive.size() && !changed; ++y) {
        const CurveIndex a = alive[x], b = alive[y];
        if (s.upper(a, b) != 0) continue;
        ReductionStep step;
        if (row_matches(a, b, 1) || row_matches(a, b, -1)) {
          step = {b, ReductionStep::Kind::Duplicate, a, row_matches(a, b, 1) ? 1 : -1};
        } else if (row_zero(a)) {
          step = {a, ReductionStep::Kind::Empty, 0, 1};
        } else if (row_zero(b)) {
          step = {b, ReductionStep::Kind::Empty, 0, 1};
        } else {
          return Unresolvable{a, b};
        }
        log.steps.push_back(step);
        drop(step.removed);
        changed = true;
      }
    }
  }

  log.kept = alive;
  std::vector<Integer> entries(Scheme::entry_count(alive.size()));
  for (CurveIndex j = 2; j <= alive.size(); ++j)
    for (CurveIndex i = 1; i < j; ++i) entries[Scheme::position(i, j)] = s.upper(alive[i - 1], alive[j - 1]);
  log.reduced = Scheme(alive.size(), std::move(entries));
  return log;
}

}  // namespace curvesys
