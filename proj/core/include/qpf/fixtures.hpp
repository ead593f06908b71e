#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpf/diagram.hpp"
#include "qpf/factorization.hpp"

namespace qpf {

/// Raised when a fixture fails its own check at load time.
class FixtureError : public Error {
 public:
  using Error::Error;
};

/// [a,b]^3 = [a^-1 b a, a^-2 b a b^-1][b a b^-1, b^2] in Z*Z, as lhs (k = 2)
/// against rhs [a,b] with exponent 3.
TheoremInstance culler3();

struct WordIdentity {
  Word lhs;
  Word rhs;
};

/// a^n b^{a^{n-1}} ... b^a b against (ab)^n in Z*Z.
WordIdentity abn(std::int64_t n);

/// In Z2*Z2, [c,d]^n = [c, (cd)^n]; lhs has k = 1, rhs is [c,d] with exponent n.
TheoremInstance dihedral(std::int64_t n);

/// [a,b][a,b]^{a^-1}...[a,b]^{a^{1-m}} = 1 in Zm*Z.
TheoremInstance torsion_collapse(std::int64_t m);

/// One-face torus with two vertices and three edges whose face reads (ab)^3.
/// `ctx` must have two factors.
LabeledDiagram fig1(const ContextPtr& ctx);

struct FixtureRun {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<std::string> fixture_names();
/// Loads the fixture (which re-verifies it) and reports the outcome.
/// `param` is n for abn and dihedral, m for torsion-collapse, the factor
/// order for fig1 (0 = Z) and ignored for culler3.
FixtureRun run_fixture(const std::string& name, std::int64_t param);

}  // namespace qpf
