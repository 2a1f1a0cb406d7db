#include "sedq/centroid.h"

#include <vector>

namespace sedq {

void note_search(int calls, int bound) {
  WorkCounters& c = counters();
  ++c.searches;
  c.oracle_calls += static_cast<std::uint64_t>(calls);
  c.max_search_calls = std::max<std::uint64_t>(c.max_search_calls, calls);
  c.min_search_slack = std::min<std::int64_t>(c.min_search_slack, bound - calls);
}

namespace {

struct Pending {
  std::int32_t start;
  std::int32_t parent;  // centroid above, -1 for the root
  int slot;
};

}  // namespace

std::int32_t build_centroid_into(const FpvdView& f, std::int32_t* cchild) {
  const std::int32_t nv = f.nv;
  if (nv == 0) throw Error(ErrorCode::NoVertices, "centroid tree of a diagram without vertices");
  std::fill(cchild, cchild + 3 * nv, -1);
  std::vector<char> removed(nv, 0);
  std::vector<std::int32_t> order, par, size(nv);
  order.reserve(nv);
  par.assign(nv, -1);
  auto nb = [&](std::int32_t v, int k) -> std::int32_t {
    std::int32_t e = f.slot_edge(v, k);
    if (f.unbounded(e)) return -1;
    std::int32_t w = f.other_end(e, v);
    return removed[w] ? -1 : w;
  };

  std::int32_t root = -1;
  std::vector<Pending> work{{0, -1, 0}};
  while (!work.empty()) {
    Pending job = work.back();
    work.pop_back();
    // component of job.start, in DFS preorder
    order.clear();
    order.push_back(job.start);
    par[job.start] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::int32_t v = order[i];
      for (int k = 0; k < 3; ++k) {
        std::int32_t w = nb(v, k);
        if (w >= 0 && w != par[v]) {
          par[w] = v;
          order.push_back(w);
        }
      }
    }
    const std::int32_t total = static_cast<std::int32_t>(order.size());
    for (std::size_t i = order.size(); i-- > 0;) {
      std::int32_t v = order[i];
      size[v] = 1;
      for (int k = 0; k < 3; ++k) {
        std::int32_t w = nb(v, k);
        if (w >= 0 && w != par[v]) size[v] += size[w];
      }
    }
    // walk towards the heavy side until no part exceeds half
    std::int32_t c = job.start;
    for (;;) {
      std::int32_t heavy = -1;
      for (int k = 0; k < 3; ++k) {
        std::int32_t w = nb(c, k);
        if (w >= 0 && w != par[c] && 2 * size[w] > total) heavy = w;
      }
      if (heavy < 0) break;
      c = heavy;
    }
    removed[c] = 1;
    if (job.parent < 0) {
      root = c;
    } else {
      cchild[3 * job.parent + job.slot] = c;
    }
    for (int k = 0; k < 3; ++k) {
      std::int32_t w = nb(c, k);
      if (w >= 0) work.push_back({w, c, k});
    }
  }
  return root;
}

CentroidTree build_centroid(const FpvdView& f) {
  CentroidTree t;
  t.child.assign(3 * static_cast<std::size_t>(f.nv), -1);
  t.root = build_centroid_into(f, t.child.data());
  return t;
}

std::vector<int> centroid_depths(const FpvdView& f) {
  std::vector<int> d(f.nv, 0);
  if (f.croot < 0) return d;
  std::vector<std::int32_t> st{f.croot};
  d[f.croot] = 1;
  while (!st.empty()) {
    std::int32_t u = st.back();
    st.pop_back();
    for (int k = 0; k < 3; ++k) {
      std::int32_t c = f.cchild[3 * u + k];
      if (c >= 0) {
        d[c] = d[u] + 1;
        st.push_back(c);
      }
    }
  }
  return d;
}

}  // namespace sedq
