#include "gfh/equations.hpp"

#include <sstream>

#include "json_codec.hpp"

namespace gfh {

namespace {

std::string latex_exp(const std::string& e) {
    if (e == "1") return "";
    if (e.size() == 1) return "^" + e;
    return "^{" + e + "}";
}

std::string plain_exp(const std::string& e) {
    if (e == "1") return "";
    if (e.front() == '-') return "^(" + e + ")";
    return "^" + e;
}

std::string eta_power(u64 m, u64 index, bool latex) {
    const std::string base = latex ? "\\zeta_{" + std::to_string(m) + "}" : "zeta_{" + std::to_string(m) + "}";
    if (index == 1) return base;
    return base + (latex ? latex_exp(std::to_string(index)) : plain_exp(std::to_string(index)));
}

std::string weil_line(u64 n, u64 u, u64 v, bool latex) {
    auto ex = [&](u64 k) { return latex ? latex_exp(std::to_string(k)) : plain_exp(std::to_string(k)); };
    const std::string beta = latex ? "\\beta" : "beta";
    const std::string times = latex ? "" : "*";
    return "y" + ex(n) + " = " + beta + ex(u) + times + "(1-" + beta + ")" + ex(v);
}

std::string cover_line(const CurveModel& md, bool latex) {
    auto ex = [&](const std::string& k) { return latex ? latex_exp(k) : plain_exp(k); };
    const std::string beta = latex ? "\\beta" : "beta";
    return "x" + ex(std::to_string(md.m)) + " = 1-" + beta;
}

std::string cyclic_line(const CurveModel& md, bool latex) {
    auto ex = [&](const std::string& k) { return latex ? latex_exp(k) : plain_exp(k); };
    std::string out = "z" + ex(std::to_string(md.pf)) + " = x" + ex("-" + md.r.str());
    for (const auto& fe : md.factor_exponents) {
        if (fe.exponent == 0) continue;
        out += latex ? "" : "*";
        out += "(x-" + eta_power(md.m, fe.root_index, latex) + ")" + ex(std::to_string(fe.exponent));
    }
    return out;
}

}  // namespace

BigInt compute_r(const GroupParams& gp) {
    const BigInt q = gp.q();
    const BigInt p = gp.p();
    BigInt numerator = boost::multiprecision::pow(q, static_cast<unsigned>(gp.m())) - 1;
    if (numerator <= 0) throw Error(Errc::Internal, "q^m - 1 is not positive");
    unsigned valuation = 0;
    BigInt rest = numerator;
    while (rest % p == 0) {
        rest /= p;
        ++valuation;
    }
    if (valuation != gp.e())
        throw Error(Errc::Internal, "p-adic valuation of q^m - 1 is " + std::to_string(valuation) +
                                        ", expected e = " + std::to_string(gp.e()));
    // rest is numerator / p^e and already prime to p
    return rest;
}

WeilModel weil_quotient(const GroupParams& gp, const Lift& lift) {
    const u64 p = gp.p();
    if (lift.u % p == 0 || lift.v % p == 0)
        throw Error(Errc::NoCoprimePair, "the Weil quotient needs u and v prime to p");
    return {gp.n(), lift.u % gp.n(), lift.v % gp.n(), lift.rotated};
}

CurveModel full_model(const GroupParams& gp, const Lift& lift) {
    if (2 * gp.f() < gp.e())
        throw Error(Errc::HypothesisFailed,
                    "explicit model needs 2f >= e (f = " + std::to_string(gp.f()) + ", e = " +
                        std::to_string(gp.e()) + "); the Weil quotient y^n = beta^u (1-beta)^v is still available");
    const WeilModel weil = weil_quotient(gp, lift);
    CurveModel md;
    md.n = gp.n();
    md.u = weil.u;
    md.v = weil.v;
    md.m = gp.m();
    md.pf = gp.pf();
    md.r = compute_r(gp);
    md.a = checked_pow(gp.p(), 2 * gp.f() - gp.e());
    md.factor_exponents.reserve(md.m);
    for (u64 i = 0; i < md.m; ++i) md.factor_exponents.push_back({i, md.a * i});
    return md;
}

std::string render(const WeilModel& model, ModelFormat format) {
    switch (format) {
        case ModelFormat::Latex: return weil_line(model.n, model.u, model.v, true);
        case ModelFormat::Plain: return weil_line(model.n, model.u, model.v, false);
        case ModelFormat::Json: return detail::weil_to_json(model).dump();
    }
    return {};
}

std::string render(const CurveModel& model, ModelFormat format) {
    std::ostringstream os;
    switch (format) {
        case ModelFormat::Latex:
            os << "\\begin{aligned}\n"
               << "  " << weil_line(model.n, model.u, model.v, true) << " \\\\\n"
               << "  " << cover_line(model, true) << " \\\\\n"
               << "  " << cyclic_line(model, true) << "\n"
               << "\\end{aligned}\n"
               << "% r = " << model.r.str() << ", a = " << model.a;
            if (model.m > 1) os << ", \\zeta_{" << model.m << "} = e^{2\\pi i/" << model.m << "}";
            os << '\n';
            break;
        case ModelFormat::Plain:
            os << "(1) " << weil_line(model.n, model.u, model.v, false) << '\n'
               << "(2) " << cover_line(model, false) << '\n'
               << "(3) " << cyclic_line(model, false) << '\n'
               << "r = " << model.r.str() << '\n'
               << "a = " << model.a << '\n';
            break;
        case ModelFormat::Json: os << detail::model_to_json(model).dump(); break;
    }
    return os.str();
}

CurveModel parse_model_json(std::string_view text) {
    try {
        return detail::model_from_json(detail::Json::parse(text));
    } catch (const std::exception& ex) {
        throw Error(Errc::InvalidArgument, std::string("malformed curve model JSON: ") + ex.what());
    }
}

namespace detail {

Json model_to_json(const CurveModel& md) {
    Json factors = Json::array();
    for (const auto& fe : md.factor_exponents) factors.push_back({fe.root_index, fe.exponent});
    return Json{{"n", md.n},
                {"u", md.u},
                {"v", md.v},
                {"m", md.m},
                {"pf", md.pf},
                {"r", md.r.str()},
                {"a", md.a},
                {"eta", "zeta_{" + std::to_string(md.m) + "}"},
                {"factorExponents", factors}};
}

CurveModel model_from_json(const Json& j) {
    CurveModel md;
    md.n = j.at("n").get<u64>();
    md.u = j.at("u").get<u64>();
    md.v = j.at("v").get<u64>();
    md.m = j.at("m").get<u64>();
    md.pf = j.at("pf").get<u64>();
    md.r = BigInt(j.at("r").get<std::string>());
    md.a = j.at("a").get<u64>();
    for (const auto& fe : j.at("factorExponents"))
        md.factor_exponents.push_back({fe.at(0).get<u64>(), fe.at(1).get<u64>()});
    return md;
}

Json weil_to_json(const WeilModel& w) {
    return Json{{"n", w.n}, {"u", w.u}, {"v", w.v}, {"rotatedLift", w.rotated}};
}

}  // namespace detail

}  // namespace gfh
