#include "tfrde/timegrid.hpp"

#include <cmath>
#include <stdexcept>

#include "tfrde/errors.hpp"

namespace tfrde {

MixedMesh MixedMesh::build(double T, int M, int m, int v) {
  if (!(T > 0.0)) throw std::invalid_argument("MixedMesh: T > 0 required");
  if (M < 1) throw std::invalid_argument("MixedMesh: M >= 1 required");
  if (m < 1 || m > M) throw std::invalid_argument("MixedMesh: 1 <= m <= M required");
  if (v < 1) throw std::invalid_argument("MixedMesh: v >= 1 required");

  MixedMesh mesh;
  mesh.T = T;
  mesh.M = M;
  mesh.m = m;
  mesh.v = v;
  mesh.h = T / M;
  mesh.r = (m == 1) ? 2.0 : static_cast<double>(m) / (m - 1);
  mesh.h1 = m * mesh.h * (mesh.r - 1.0) / (std::pow(mesh.r, v) - 1.0);
  if (!(mesh.h1 >= 1e-300))
    throw GradedUnderflow("MixedMesh: first graded step underflows (v too large)");

  mesh.graded_steps.resize(v);
  mesh.graded_nodes.resize(v + 1);
  mesh.graded_nodes[0] = 0.0;
  double sum = 0.0, comp = 0.0;  // Kahan accumulation of the tiny geometric steps
  double hi = mesh.h1;
  for (int i = 1; i <= v; ++i) {
    mesh.graded_steps[i - 1] = hi;
    const double y = hi - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    mesh.graded_nodes[i] = sum;
    hi *= mesh.r;
  }

  mesh.uniform_nodes.resize(M - m + 1);
  for (int j = m; j <= M; ++j) mesh.uniform_nodes[j - m] = j * mesh.h;
  return mesh;
}

double MixedMesh::step_size(int step) const {
  if (step < 1 || step > num_steps()) throw std::out_of_range("MixedMesh: bad step");
  return step <= v ? graded_steps[step - 1] : h;
}

double MixedMesh::step_start(int step) const {
  if (step < 1 || step > num_steps()) throw std::out_of_range("MixedMesh: bad step");
  if (step <= v) return graded_nodes[step - 1];
  return (m + (step - v) - 1) * h;
}

double MixedMesh::node_time(int idx) const {
  if (idx < 0 || idx > num_steps()) throw std::out_of_range("MixedMesh: bad node");
  if (idx <= v) return graded_nodes[idx];
  return (m + (idx - v)) * h;
}

}  // namespace tfrde
