#pragma once

#include <vector>

namespace tfrde {

/// Mixed time mesh: a geometric (graded) mesh with ratio r covering [0, m h]
/// in v steps, followed by a uniform mesh of step h = T/M on [m h, T].
/// r = 2 when m = 1 and m/(m-1) otherwise; the first graded step is
/// h_1 = m h (r-1)/(r^v - 1). With v = m = 1 the mesh is purely uniform.
struct MixedMesh {
  double T = 1.0;
  int M = 1;  // uniform-step count over [0, T]
  int m = 1;  // graded span covers [0, m h]
  int v = 1;  // graded-step count
  double r = 2.0;
  double h = 1.0;   // uniform step T/M
  double h1 = 1.0;  // first graded step

  std::vector<double> graded_nodes;   // t^_0 = 0 .. t^_v = m h
  std::vector<double> graded_steps;   // h_1 .. h_v
  std::vector<double> uniform_nodes;  // t_m .. t_M

  static MixedMesh build(double T, int M, int m, int v);

  /// Solver steps: 1..v graded, v+1..v+(M-m) uniform (paper j = m+1..M).
  int num_steps() const { return v + (M - m); }
  bool is_graded_step(int step) const { return step <= v; }
  /// Paper's uniform index j for a uniform step.
  int uniform_j(int step) const { return m + (step - v); }
  double step_size(int step) const;
  double step_start(int step) const;
  /// Mesh node times, idx = 0 .. num_steps() (node 0 is t = 0).
  double node_time(int idx) const;
};

}  // namespace tfrde
