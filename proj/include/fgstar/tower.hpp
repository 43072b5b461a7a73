// Tower specifications: validation, presentations, abelian pouches,
// N-multiplets, star views, closures, and the morphism-extension test.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgstar/intlinear.hpp"
#include "fgstar/star.hpp"
#include "fgstar/word.hpp"

namespace fgstar {

struct InvalidTowerError : std::runtime_error {
  explicit InvalidTowerError(const std::string& what)
      : std::runtime_error("invalid tower: " + what) {}
};
struct UnsupportedTowerShapeError : std::runtime_error {
  explicit UnsupportedTowerShapeError(const std::string& what)
      : std::runtime_error("unsupported tower shape: " + what) {}
};
struct SingularClosureError : std::runtime_error {
  SingularClosureError() : std::runtime_error("closure matrix is singular") {}
};
struct FloorMismatchError : std::runtime_error {
  FloorMismatchError() : std::runtime_error("closure floor count mismatch") {}
};
struct DimensionMismatchError : std::runtime_error {
  DimensionMismatchError() : std::runtime_error("closure dimension mismatch") {}
};

struct AbelianFloor {
  Word peg;  // over the generators of the tower built so far
  int rank;
  bool operator==(const AbelianFloor&) const = default;
};
struct SurfaceFloor {
  int genus;
  bool orientable;
  int boundaries;
  std::vector<Word> gluing;             // one word per boundary, in base generators
  std::vector<Word> retraction_images;  // images of the surface generators, optional
  bool operator==(const SurfaceFloor&) const = default;
};
using FloorSpec = std::variant<AbelianFloor, SurfaceFloor>;

struct TowerSpec {
  int ground_rank;
  std::vector<FloorSpec> floors;
  bool operator==(const TowerSpec&) const = default;
};

struct Violation {
  int floor;  // 1-based; 0 = tower-level
  std::string rule;
  std::string message;
};

struct TowerReport {
  std::vector<Violation> violations;
  std::vector<std::string> unchecked;  // invariants that cannot be checked exactly
};

TowerReport validate_tower_report(const TowerSpec& t);
std::vector<Violation> validate_tower(const TowerSpec& t);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // over generator indices, reduced and nonempty
};

Presentation presentation_of(const TowerSpec& t);
Presentation abelian_pouch(const TowerSpec& t);

// Number of abelian floors whose peg lies in the ground free group.
int ground_peg_count(const TowerSpec& t);

TowerSpec multiplet(const TowerSpec& t, int n);

// Star-of-groups view of an N-multiplet.
StarPresentation star_view(const TowerSpec& t_multiplet, int n_rays);

struct FloorClosure {
  IntVector c;  // peg-exponent column
  IntMatrix m;  // invertible over Q (finite index)
};
struct ClosureSpec {
  std::vector<FloorClosure> floors;  // one per abelian floor
};

Presentation closure_apply(const TowerSpec& t, const ClosureSpec& spec);

// Witness s with t = c + M*s, iff the morphism extends to the closure.
std::optional<IntVector> morphism_extends(const FloorClosure& fc, const IntVector& t);

int abelianization_rank(const Presentation& p);

std::string print_presentation(const Presentation& p);

// JSON I/O (format: 1).
std::string tower_to_json(const TowerSpec& t);
TowerSpec tower_from_json(const std::string& text);
ClosureSpec closure_from_json(const std::string& text);

}  // namespace fgstar
