#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfh/equations.hpp"

namespace gfh {

struct ClassEquations {
    WeilModel weil;
    std::optional<CurveModel> model;
    /// Set when the explicit model is unavailable (2f < e).
    std::string note;
};

struct AtlasEntry {
    CurveClass cls;
    Lift lift;
    FieldOfDefinition field;
    /// Lex-least member of the Galois orbit; doubles as the orbit id.
    CurveClass orbit;
    u64 aut_order = 0;
    u64 genus = 0;
    std::optional<ClassEquations> equations;
};

struct Atlas {
    GroupParams gp;
    std::vector<AtlasEntry> entries;  // sorted by canonical triple
    /// Orbit ids, sorted; each orbit's members are the entries carrying that id.
    std::vector<CurveClass> orbits;
};

struct AtlasOptions {
    bool with_equations = false;
    unsigned workers = 1;
    /// Cap on classes * n^2, the edges traced for genus computation.
    u64 work_bound = 500'000'000;
};

/// Full census for one (p, e, f). Genus is traced on a dessin built from each
/// class lift; the result does not depend on `workers`.
Atlas build_atlas(const GroupParams& gp, const AtlasOptions& options = {});

inline constexpr const char* kAtlasSchema = "gfh-atlas/1";

/// Deterministic, 2-space indented, trailing newline.
std::string atlas_to_json(const Atlas& atlas);

/// Header p,e,f,u,v,w,fieldKind,fieldDegree,orbitRep,autOrder,genus.
/// orbitRep is written as u;v;w.
std::string atlas_to_csv(const Atlas& atlas);

struct PlainView {
    bool orbits = false;
    bool fields = false;
    bool equations = false;
};

std::string atlas_to_plain(const Atlas& atlas, const PlainView& view);

/// LaTeX listing of the equations (requires an atlas built with equations).
std::string atlas_to_latex(const Atlas& atlas);

}  // namespace gfh
