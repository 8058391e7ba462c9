#include "glpair/symmetric_form.hpp"

#include <queue>
#include <stdexcept>

namespace glpair {

SymmetricForm gl_matrix(const TaitGraph& g, std::span<const int> edge_priority) {
  const int nv = g.vertex_count();
  const int ne = g.edge_count();
  std::vector<int> order;
  if (edge_priority.empty()) {
    for (int e = 0; e < ne; ++e) order.push_back(e);
  } else {
    order.assign(edge_priority.begin(), edge_priority.end());
    if (static_cast<int>(order.size()) != ne) throw std::invalid_argument("edge priority must list every edge");
  }

  std::vector<std::vector<int>> incident(nv);
  for (int e : order) {
    incident[g.edges[e].tail].push_back(e);
    if (g.edges[e].head != g.edges[e].tail) incident[g.edges[e].head].push_back(e);
  }

  // Breadth-first forest; parent_edge[v] is the tree edge towards the root.
  std::vector<int> parent_edge(nv, -1);
  std::vector<char> reached(nv, 0), in_tree(ne, 0);
  for (int root = 0; root < nv; ++root) {
    if (reached[root]) continue;
    reached[root] = 1;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int e : incident[v]) {
        const int w = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
        if (reached[w]) continue;
        reached[w] = 1;
        parent_edge[w] = e;
        in_tree[e] = 1;
        todo.push(w);
      }
    }
  }

  // Path from v up to its root, as edge coefficients (+1 when an edge is
  // walked from tail to head).
  auto to_root = [&](int v) {
    Vector<Integer> path = Vector<Integer>::Zero(ne);
    while (parent_edge[v] != -1) {
      const TaitEdge& e = g.edges[parent_edge[v]];
      if (e.tail == v) {
        path[parent_edge[v]] += 1;
        v = e.head;
      } else {
        path[parent_edge[v]] -= 1;
        v = e.tail;
      }
    }
    return path;
  };

  SymmetricForm f;
  std::vector<Vector<Integer>> cols;
  for (int e : order) {
    if (in_tree[e]) {
      f.forest_edges.push_back(g.edges[e].crossing);
      continue;
    }
    // e runs tail -> head; return to tail through the forest.
    Vector<Integer> cyc = to_root(g.edges[e].head) - to_root(g.edges[e].tail);
    cyc[e] += 1;
    cols.push_back(std::move(cyc));
    f.cycle_edges.push_back(g.edges[e].crossing);
  }

  const int n = static_cast<int>(cols.size());
  f.cycles = IntMatrix::Zero(ne, n);
  for (int j = 0; j < n; ++j) f.cycles.col(j) = cols[j];
  IntMatrix labels = IntMatrix::Zero(ne, ne);
  for (int e = 0; e < ne; ++e) labels(e, e) = g.edges[e].label;
  f.gram = f.cycles.transpose() * labels * f.cycles;
  return f;
}

Integer pairing_on_cycle(const TaitGraph& g, const Vector<Integer>& c) {
  Integer total = 0;
  for (int e = 0; e < g.edge_count(); ++e) total += g.edges[e].label * c[e] * c[e];
  return total;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive-definite";
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::singular: return "singular";
    case Definiteness::empty: return "empty";
  }
  return "unknown";
}

namespace detail {

Integer bareiss_determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SignatureResult congruence_signature(RatMatrix m, const IntMatrix& exact) {
  if (m.rows() != m.cols()) throw std::invalid_argument("form must be square");
  if (m != m.transpose()) throw std::invalid_argument("form must be symmetric");
  const Eigen::Index n = m.rows();
  SignatureResult r;
  r.size = static_cast<int>(n);

  Eigen::Index k = 0;
  for (; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: find an off-diagonal partner (i, j) and add
      // row/column j into i, which makes m(i, i) = 2 m(i, j).
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < n && pi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;  // trailing block is zero
      m.row(pi) += m.row(pj);
      m.col(pi) += m.col(pj);
      p = pi;
    }
    if (p != k) {
      m.row(p).swap(m.row(k));
      m.col(p).swap(m.col(k));
    }
    const Rational pivot = m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / pivot;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
    r.pivots.push_back(pivot);
    r.signature += sgn(pivot);
  }
  r.rank = static_cast<int>(k);
  r.determinant = bareiss_determinant(exact);

  if (n == 0) r.verdict = Definiteness::empty;
  else if (r.rank < n) r.verdict = Definiteness::singular;
  else if (r.signature == n) r.verdict = Definiteness::positive_definite;
  else if (r.signature == -n) r.verdict = Definiteness::negative_definite;
  else r.verdict = Definiteness::indefinite;
  return r;
}

}  // namespace detail

}  // namespace glpair
