#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "superconf/geometry.hpp"
#include "superconf/jets.hpp"
#include "superconf/minimal.hpp"

namespace superconf::catalog {

enum class EntryKind {
    minimal_pair,
    space_form_immersion,
    superconformal_closed_form,
    surface,   // plain immersion into R⁴ (controls)
    c2_curve,  // holomorphic curve in C² (components 0, 1)
};

const char* to_string(EntryKind k);

struct CatalogEntry {
    std::string name;
    std::string description;
    EntryKind kind = EntryKind::minimal_pair;
    std::optional<MinimalPair> pair;        // minimal_pair
    std::optional<HolomorphicCurve> curve;  // c2_curve
    SurfaceMap surface;                     // everything that is not a pair or a curve
    Ambient ambient = Ambient::euclidean();
    Rect grid;  // default sampling rectangle, inside the domain
    std::vector<std::string> oracles;
};

const std::vector<std::string>& names();

// Minimal-pair entries are certified on their default grid; unknown names throw not_found.
CatalogEntry get(const std::string& name);

// Closed-form oracle as a jet map over the oracle's own parameters.
SurfaceMap oracle(const CatalogEntry& entry, const std::string& which);
Eigen::VectorXd expected_eval(const CatalogEntry& entry, const std::string& which, double u, double v);

// Veronese chart: w = tan(φ/2) e^{iθ}.
cplx veronese_w(double phi, double theta);

// Whitney chart σ(x, y, z) = (x + iy)/(1 − z) and the congruence O with I∘f = O W / √2.
Eigen::Matrix4d whitney_congruence();

}  // namespace superconf::catalog
