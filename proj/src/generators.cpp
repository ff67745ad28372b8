#include "cdom/generators.hpp"

#include <string>
#include <vector>

namespace cdom::gen {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete graph requires n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star(int n) {
  require(n >= 1, "star requires n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph requires both parts nonempty");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph cocktail_party(int k) {
  require(k >= 2, "cocktail party graph requires k >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < 2 * k; ++i)
    for (int j = i + 1; j < 2 * k; ++j)
      if (i / 2 != j / 2) e.emplace_back(i, j);
  return Graph::from_edges(2 * k, e);
}

}  // namespace cdom::gen
