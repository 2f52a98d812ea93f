#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <vector>

namespace dyadlab {

/// A finite metric space: either a Euclidean point cloud or an explicit
/// distance matrix. Distances are symmetric, nonnegative, zero on the
/// diagonal; the triangle inequality can be checked on demand.
struct MetricSpace {
  enum class Kind { PointCloud, DistanceMatrix };

  Kind kind = Kind::PointCloud;
  Eigen::MatrixXd coords;  // dim x n, point clouds only
  Eigen::MatrixXd dist;    // n x n pairwise distances

  int size() const { return static_cast<int>(dist.cols()); }
  double distance(int i, int j) const { return dist(i, j); }
  double diameter() const;
  bool triangle_inequality_holds(double tol = 1e-12) const;

  static MetricSpace from_points(const Eigen::MatrixXd& coords);
  static MetricSpace from_distance_matrix(const Eigen::MatrixXd& dist);
};

/// One piece of a hierarchical partition. Finest cells are identified with
/// the terminal cubes, so every cube owns the contiguous cell range
/// [cellBegin, cellEnd). Point ranges index Lattice::pointOrder and carry
/// the underlying geometry for Christ-type lattices.
struct Cube {
  int id = -1;
  int generation = 0;
  int parent = -1;     // -1 for the root
  int firstSon = -1;   // sons occupy contiguous ids [firstSon, firstSon+sonCount)
  int sonCount = 0;
  int cellBegin = 0;
  int cellEnd = 0;
  int pointBegin = 0;
  int pointEnd = 0;
  int center = -1;     // representative point index
  double diameter = 0.0;
  double inradius = 0.0;

  bool terminal() const { return sonCount == 0; }
  int cellCount() const { return cellEnd - cellBegin; }
};

/// Finite dyadic lattice: partitions E_0..E_depth of the finest cells,
/// each E_k refining E_{k-1}. Immutable after construction.
struct Lattice {
  enum class Kind { Interval, Christ };

  Kind kind = Kind::Interval;
  std::vector<Cube> cubes;              // id-indexed, breadth-first by generation
  std::vector<std::vector<int>> levels; // cube ids per generation, cell order
  std::vector<int> pointOrder;          // permutation of point indices (Christ)
  std::vector<int> cellLeaf;            // finest cell -> terminal cube id
  double delta = 0.5;
  int depth = 0;
  int maxSons = 0;                      // measured
  double almostBallConstant = 1.0;      // measured min over cubes of inradius/diameter

  int numCells() const { return static_cast<int>(cellLeaf.size()); }
  int numCubes() const { return static_cast<int>(cubes.size()); }
  const Cube& root() const { return cubes.front(); }
  const Cube& cube(int id) const { return cubes[id]; }
  int sonId(const Cube& q, int k) const { return q.firstSon + k; }

  /// Endpoints of a finest cell of the interval lattice.
  double cellLeft(int cell) const;
  double cellRight(int cell) const;

  /// Points of a cube, in ascending original index (Christ lattices).
  std::span<const int> pointsOf(const Cube& q) const {
    return {pointOrder.data() + q.pointBegin,
            static_cast<size_t>(q.pointEnd - q.pointBegin)};
  }
};

/// Outcome of verify_lattice. Failures are entries, not exceptions.
struct LatticeReport {
  bool partitionExact = false;
  bool nestingExact = false;
  bool parentLinksConsistent = false;
  bool generationsConsistent = false;
  bool diametersMonotone = false;
  int maxSons = 0;
  double almostBallConstant = 0.0;
  double minDiameterRatio = 0.0;  // min over son/parent diameter ratios (nonzero parents)
  double maxDiameterRatio = 0.0;
  double minScaleRatio = 0.0;     // min over cubes of diameter / (delta^g * diam(X))
  double maxScaleRatio = 0.0;
  bool pass() const {
    return partitionExact && nestingExact && parentLinksConsistent &&
           generationsConsistent && diametersMonotone;
  }
};

/// Binary lattice of half-open dyadic intervals of [0,1); delta = 1/2.
Lattice build_interval_lattice(int depth);

/// Christ-type lattice on a finite metric space: per-cube greedy maximal
/// delta^k * diam(X) separated nets with nearest-point assignment, son nets
/// nested inside their parent cube. Deterministic for fixed inputs.
Lattice build_christ_lattice(const MetricSpace& space, double delta, int depth,
                             std::uint64_t seed);

LatticeReport verify_lattice(const Lattice& lat, const MetricSpace* space = nullptr);

/// All cubes J inside Q with g(J) = g(Q) + offset, in cell order.
std::vector<int> descendants_at(const Lattice& lat, int cubeId, int offset);

/// CSV ingestion: one point per row, coordinates as columns / square matrix.
MetricSpace load_points_csv(const std::string& path);
MetricSpace load_distance_csv(const std::string& path);

nlohmann::json lattice_to_json(const Lattice& lat);

}  // namespace dyadlab
