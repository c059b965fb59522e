#include "cherednik/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_label(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  std::vector<Tableau> out;
  Tableau cur(n);
  std::vector<int> filled(p.size(), 0);
  // Place entries 1..n in turn, trying rows top to bottom.
  std::function<void(int)> rec = [&](int m) {
    if (m > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < p.size(); ++r) {
      if (filled[r] >= p[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      cur[m - 1] = {static_cast<int>(r), filled[r]};
      ++filled[r];
      rec(m + 1);
      --filled[r];
    }
  };
  rec(1);
  return out;
}

int swapped_tableau(const std::vector<Tableau>& all, std::size_t t, int i) {
  Tableau s = all[t];
  std::swap(s[i - 1], s[i]);
  for (std::size_t u = 0; u < all.size(); ++u)
    if (all[u] == s) return static_cast<int>(u);
  return -1;
}

bool leads_pair(const Tableau& t, int i) { return t[i].first > t[i - 1].first; }

ExactMatrix young_seminormal(const Partition& p, int i) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  if (i < 1 || i >= n) throw InvalidArgument("transposition index out of range");
  const auto tabs = standard_tableaux(p);
  ExactMatrix m(tabs.size(), tabs.size());
  for (std::size_t t = 0; t < tabs.size(); ++t) {
    const int rho = content(tabs[t], i + 1) - content(tabs[t], i);
    const ExactScalar f(1, rho);
    m(t, t) = f;
    const int u = swapped_tableau(tabs, t, i);
    if (u < 0) continue;
    const int rho_u = -rho;
    if (leads_pair(tabs[t], i)) {
      m(u, t) = 1;
    } else {
      m(u, t) = f * ExactScalar(1, rho_u) + 1;
    }
  }
  return m;
}

}  // namespace cherednik
