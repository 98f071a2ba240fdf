#include "gfh/atlas.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gfh/hypermap.hpp"
#include "json_codec.hpp"
#include "parallel.hpp"

namespace gfh {

namespace {

std::string triple_text(const Triple& t, const char* sep = ",") {
    return std::to_string(t[0]) + sep + std::to_string(t[1]) + sep + std::to_string(t[2]);
}

const char* kHypothesisNote = "hypothesis 2f >= e fails; only the Weil quotient is available";

}  // namespace

Atlas build_atlas(const GroupParams& gp, const AtlasOptions& options) {
    Atlas atlas{gp, {}, {}};
    const auto classes = enumerate_classes(gp, options.workers);
    const u64 n = gp.n();
    if (n > kMaxDessinDegree || classes.size() > options.work_bound / (n * n))
        throw Error(Errc::BoundExceeded, std::to_string(classes.size()) + " classes of " + std::to_string(n * n) +
                                             " edges each exceed the atlas work bound");
    const bool model_ok = 2 * gp.f() >= gp.e();

    atlas.entries.resize(classes.size());
    detail::parallel_for(classes.size(), options.workers, [&](std::size_t i) {
        AtlasEntry& entry = atlas.entries[i];
        entry.cls = classes[i];
        entry.lift = class_lift(gp, entry.cls);
        entry.field = field_of_definition(gp, entry.cls);
        entry.orbit = galois_orbit(gp, entry.cls).front();
        entry.aut_order = curve_aut_order(gp, entry.cls).order;
        const auto epi = normalized_epi(gp, static_cast<i64>(entry.lift.u), static_cast<i64>(entry.lift.v));
        entry.genus = genus(Dessin::build(gp, epi));
        if (options.with_equations) {
            ClassEquations eq{weil_quotient(gp, entry.lift), std::nullopt, {}};
            if (model_ok)
                eq.model = full_model(gp, entry.lift);
            else
                eq.note = kHypothesisNote;
            entry.equations = std::move(eq);
        }
    });

    for (const auto& e : atlas.entries) atlas.orbits.push_back(e.orbit);
    std::sort(atlas.orbits.begin(), atlas.orbits.end());
    atlas.orbits.erase(std::unique(atlas.orbits.begin(), atlas.orbits.end()), atlas.orbits.end());
    return atlas;
}

std::string atlas_to_json(const Atlas& atlas) {
    using detail::Json;
    const auto& gp = atlas.gp;
    Json classes = Json::array();
    for (const auto& e : atlas.entries) {
        Json c{{"triple", e.cls.triple},
               {"lift", {e.lift.u, e.lift.v, e.lift.w}},
               {"field", {{"kind", std::string(field_kind_name(e.field.kind))}, {"degree", e.field.degree}, {"description", e.field.description}}},
               {"orbit", e.orbit.triple},
               {"autOrder", e.aut_order},
               {"genus", e.genus}};
        if (e.equations) {
            Json eq{{"weil", detail::weil_to_json(e.equations->weil)}};
            if (e.equations->model)
                eq["model"] = detail::model_to_json(*e.equations->model);
            else
                eq["note"] = e.equations->note;
            c["equations"] = std::move(eq);
        }
        classes.push_back(std::move(c));
    }
    const Json doc{{"schema", kAtlasSchema},
                   {"params", {{"p", gp.p()}, {"e", gp.e()}, {"f", gp.f()}, {"n", gp.n()}, {"m", gp.m()}}},
                   {"classes", std::move(classes)}};
    return doc.dump(2) + "\n";
}

std::string atlas_to_csv(const Atlas& atlas) {
    const auto& gp = atlas.gp;
    std::ostringstream os;
    os << "p,e,f,u,v,w,fieldKind,fieldDegree,orbitRep,autOrder,genus\n";
    for (const auto& e : atlas.entries) {
        os << gp.p() << ',' << gp.e() << ',' << gp.f() << ',' << e.cls.triple[0] << ',' << e.cls.triple[1] << ','
           << e.cls.triple[2] << ',' << field_kind_name(e.field.kind) << ',' << e.field.degree << ','
           << triple_text(e.orbit.triple, ";") << ',' << e.aut_order << ',' << e.genus << '\n';
    }
    return os.str();
}

std::string atlas_to_plain(const Atlas& atlas, const PlainView& view) {
    const auto& gp = atlas.gp;
    std::ostringstream os;
    os << "p = " << gp.p() << ", e = " << gp.e() << ", f = " << gp.f() << ", n = " << gp.n() << ", m = " << gp.m()
       << ": " << atlas.entries.size() << (atlas.entries.size() == 1 ? " class, " : " classes, ") << atlas.orbits.size()
       << (atlas.orbits.size() == 1 ? " Galois orbit\n" : " Galois orbits\n");

    auto write_entry = [&](const AtlasEntry& e, const char* indent) {
        os << indent << "X(" << gp.f() << ";" << triple_text(e.cls.triple) << ")";
        if (view.fields)
            os << "  field " << e.field.description << " [" << field_kind_name(e.field.kind) << ", degree "
               << e.field.degree << "]  |Aut| = " << e.aut_order << "  genus " << e.genus;
        os << '\n';
        if (view.equations && e.equations) {
            if (e.equations->model) {
                std::istringstream lines(render(*e.equations->model, ModelFormat::Plain));
                for (std::string line; std::getline(lines, line);) os << indent << "    " << line << '\n';
            } else {
                os << indent << "    (1) " << render(e.equations->weil, ModelFormat::Plain) << '\n'
                   << indent << "    " << e.equations->note << '\n';
            }
        }
    };

    if (view.orbits) {
        for (const auto& orbit : atlas.orbits) {
            os << "orbit (" << triple_text(orbit.triple) << "):\n";
            for (const auto& e : atlas.entries)
                if (e.orbit == orbit) write_entry(e, "  ");
        }
    } else {
        for (const auto& e : atlas.entries) write_entry(e, "");
    }
    return os.str();
}

std::string atlas_to_latex(const Atlas& atlas) {
    const auto& gp = atlas.gp;
    std::ostringstream os;
    for (const auto& e : atlas.entries) {
        os << "% X(" << gp.f() << ";" << triple_text(e.cls.triple) << "), lift (" << e.lift.u << "," << e.lift.v
           << "," << e.lift.w << ")\n";
        if (!e.equations) continue;
        if (e.equations->model)
            os << render(*e.equations->model, ModelFormat::Latex);
        else
            os << render(e.equations->weil, ModelFormat::Latex) << "\n% " << e.equations->note << '\n';
    }
    return os.str();
}

}  // namespace gfh
