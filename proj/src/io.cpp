#include "modcm/io.hpp"

#include "modcm/errors.hpp"

#include <fmt/format.h>

#include <ostream>

namespace modcm::io {

json to_json(const HilbertClassPoly& H)
{
    json j;
    j["D"] = H.order.disc;
    json coeffs = json::array();
    for (const auto& c : H.coeffs)
        coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

json bipoly_to_json(const BiPoly& P, int n)
{
    const bool symmetric = P == P.transposed();
    json terms = json::array();
    for (int i = 0; i <= P.degree_x(); ++i)
        for (int jj = 0; jj <= P.degree_y(); ++jj) {
            const mpz_class& c = P.coeff(i, jj);
            if (c == 0 || (symmetric && i < jj))
                continue;
            terms.push_back(json::array({i, jj, c.get_str()}));
        }
    json j;
    j["n"] = n;
    j["terms"] = std::move(terms);
    j["symmetric"] = symmetric;
    return j;
}

BiPoly bipoly_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw InvalidArgument("polynomial JSON needs a \"terms\" array");
    bool symmetric = false;
    if (j.contains("symmetric")) {
        if (!j["symmetric"].is_boolean())
            throw InvalidArgument("\"symmetric\" must be a boolean");
        symmetric = j["symmetric"].get<bool>();
    }
    BiPoly P;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw InvalidArgument("each term must be [i, j, \"coefficient\"]");
        const auto i = t[0].get<std::int64_t>();
        const auto k = t[1].get<std::int64_t>();
        if (i < 0 || k < 0 || i > 4096 || k > 4096)
            throw InvalidArgument("term exponents must lie in [0, 4096]");
        mpz_class c;
        if (t[2].is_string()) {
            if (c.set_str(t[2].get<std::string>(), 10) != 0)
                throw InvalidArgument("bad decimal coefficient: " + t[2].get<std::string>());
        } else if (t[2].is_number_integer()) {
            c = static_cast<long>(t[2].get<std::int64_t>());
        } else {
            throw InvalidArgument("coefficients must be decimal strings or integers");
        }
        P.at(static_cast<int>(i), static_cast<int>(k)) += c;
        if (symmetric && i != k)
            P.at(static_cast<int>(k), static_cast<int>(i)) += c;
    }
    P.normalize();
    if (P.is_zero())
        throw InvalidArgument("polynomial is zero");
    return P;
}

BiPoly bipoly_from_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    return bipoly_from_json(j);
}

std::string dump(const json& j)
{
    if (!j.is_object())
        return j.dump() + "\n";
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        out += first ? "\n  " : ",\n  ";
        first = false;
        out += json(key).dump() + ": ";
        const bool nested = value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object());
        if (!nested) {
            out += value.dump();
            continue;
        }
        out += "[";
        for (std::size_t i = 0; i < value.size(); ++i)
            out += (i ? ",\n    " : "\n    ") + value[i].dump();
        out += "\n  ]";
    }
    out += first ? "}\n" : "\n}\n";
    return out;
}

std::string format_double(double v)
{
    if (v < -1e299)
        return "-inf";
    if (v > 1e299)
        return "inf";
    return fmt::format("{:.10g}", v);
}

namespace {

json order_json(const OrderDisc& o)
{
    return json{{"D", o.disc}, {"d_K", o.fundamental}, {"f", o.conductor}};
}

} // namespace

json to_json(const ClassGroupSummary& s)
{
    json j = order_json(s.order);
    j["h"] = s.h;
    j["two_rank"] = s.two_rank;
    j["odd_primes"] = s.odd_primes;
    j["two_rank_bound"] = s.odd_primes + 10;
    j["two_rank_bound_holds"] = s.two_rank_bound_holds;
    json forms = json::array();
    for (const auto& q : s.forms)
        forms.push_back(json::array({q.a, q.b, q.c}));
    j["forms"] = std::move(forms);
    return j;
}

json to_json(const ContainmentCertificate& c)
{
    json j;
    j["n"] = c.n;
    j["method"] = to_string(c.method);
    j["verdict"] = to_string(c.verdict);
    j["intersection_bound"] = c.intersection_bound;
    if (c.method == ContainmentMethod::Numeric) {
        j["samples_planned"] = c.samples_planned;
        j["samples_checked"] = c.samples_checked;
        j["samples_passed"] = c.samples_passed;
        j["log2_tolerance"] = format_double(c.log2_tolerance);
        j["log2_worst_pass"] = format_double(c.log2_worst_pass);
        j["first_failure_index"] = c.first_failure_index;
        j["log2_first_failure"] = format_double(c.log2_first_failure);
    }
    j["shear"] = c.shear;
    j["note"] = c.note;
    return j;
}

json to_json(const ModularityReport& r)
{
    json j;
    j["verdict"] = to_string(r.verdict);
    j["irreducible"] = r.irreducible;
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["m"] = r.m ? json(*r.m) : json(nullptr);
    json attempts = json::array();
    for (const auto& a : r.attempts)
        attempts.push_back(to_json(a));
    j["attempts"] = std::move(attempts);
    j["note"] = r.note;
    return j;
}

json to_json(const SplitPrimeCertificate& c)
{
    json j = order_json(c.D);
    j["p"] = c.p;
    j["h"] = c.h;
    j["lhs"] = c.lhs;
    j["holds"] = c.holds;
    return j;
}

json to_json(const FieldReport& r)
{
    json j;
    j["matched"] = r.matched;
    j["mismatched"] = r.mismatched;
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(json{{"d_K1", p.dK1}, {"d_K2", p.dK2}, {"count", p.count}});
    j["pairs"] = std::move(pairs);
    json bounds = json::array();
    for (const auto& b : r.bounds)
        bounds.push_back(json{{"record", b.record}, {"h1", b.h1}, {"bound1", b.bound1}, {"h2", b.h2}, {"bound2", b.bound2}});
    j["mismatch_bounds"] = std::move(bounds);
    return j;
}

void write_cm_csv(std::ostream& out, const std::vector<CMPointRecord>& records)
{
    out << "D1,f1,D2,f2,x_re,x_im,y_re,y_im,same_field,log2_res_h1,log2_res_h2,log2_res_f\n";
    for (const auto& r : records) {
        out << r.D1.disc << ',' << r.D1.conductor << ',' << r.D2.disc << ',' << r.D2.conductor << ','
            << mp::to_string(r.x.re, 20) << ',' << mp::to_string(r.x.im, 20) << ',' << mp::to_string(r.y.re, 20)
            << ',' << mp::to_string(r.y.im, 20) << ',' << (r.same_field ? "true" : "false") << ','
            << format_double(r.log2_res_h1) << ',' << format_double(r.log2_res_h2) << ','
            << format_double(r.log2_res_f) << '\n';
    }
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows)
{
    out << "d_K,f,D,x,pi_split,li_half,bound_rhs,within_bound\n";
    for (const auto& r : rows)
        out << r.order.fundamental << ',' << r.order.conductor << ',' << r.order.disc << ',' << format_double(r.x)
            << ',' << r.pi_split << ',' << format_double(r.li_half) << ',' << format_double(r.bound_rhs) << ','
            << (r.within_bound ? "true" : "false") << '\n';
}

void write_siegel_csv(std::ostream& out, const std::vector<SiegelRow>& rows)
{
    out << "abs_D,h,ratio\n";
    for (const auto& r : rows)
        out << r.abs_disc << ',' << r.h << ',' << format_double(r.ratio) << '\n';
}

} // namespace modcm::io
