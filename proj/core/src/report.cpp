#include <deltakit/report.hpp>

#include <deltakit/catalog.hpp>

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>

namespace deltakit {

using nlohmann::json;

namespace {

Report run_report_impl(const Scenario& s, bool emit_chambers) {
    validate_scenario(s);
    Report r;
    r.scenario = s.name;

    AlgebraPtr alg = s.make_algebra();
    ThreefoldClass a = expand_relation(alg, s.threefold.minus_k);
    ThreefoldClass b = expand_relation(alg, s.ray);
    ChamberedDecomposition tf = sweep_threefold(a, b, s.tau_hint);
    r.tau = tf.tau;
    r.s_x = s_divisor(tf, s.threefold.minus_k_cubed);
    r.computed["tau"] = r.tau;
    r.computed["S_X"] = r.s_x;

    if (s.flag == Scenario::FlagKind::none) {
        r.certified = r.s_x < Rat(1);
    } else {
        FlagGeometry g;
        g.algebra = alg;
        g.tf = tf;
        g.restriction = *s.restriction;
        g.surface = s.make_surface();
        g.curves = s.make_curves(g.surface);
        g.minus_k_cubed = s.threefold.minus_k_cubed;

        if (s.flag == Scenario::FlagKind::curve) {
            CurveFlagResult cf = s_curve_flag(g, s.flag_curve, s.ord_bounds);
            r.curve_flag = cf;
            r.computed["S_WC"] = cf.total;
            r.computed["S_WC_first"] = cf.first_term;
            r.computed["S_WC_double"] = cf.double_term;
            Verdict v = certify_curve(r.s_x, cf.total);
            r.certified = v.certified;
        } else {
            PointFlag pf(g, s.blow_mults(), s.n_restrictions);
            r.s_wf_first = pf.first_term();
            r.s_wf = pf.s_point_flag_F();
            r.s_wo_quad = pf.quad_term();
            r.computed["S_WF"] = *r.s_wf;
            r.computed["S_WF_first"] = *r.s_wf_first;
            r.computed["S_WO_quad"] = *r.s_wo_quad;
            std::map<std::string, Rat> s_o;
            for (const Scenario::Profile& p : s.profiles) {
                PointProfile o{p.name, p.mults};
                Rat fo = pf.f_o_term(o);
                Rat so = pf.s_point_flag_O(o);
                r.profiles.push_back({p.name, fo, so});
                r.computed["F_O[" + p.name + "]"] = fo;
                r.computed["S_WO[" + p.name + "]"] = so;
                s_o[p.name] = so;
            }
            Verdict v = certify_point(r.s_x, *r.s_wf, s_o);
            r.certified = v.certified;
        }
    }

    for (const auto& [key, expected] : s.expected) {
        auto it = r.computed.find(key);
        if (it == r.computed.end() || it->second != expected) {
            Report::Mismatch m;
            m.key = key;
            m.expected = expected;
            m.computed = it == r.computed.end() ? Rat(0) : it->second;
            r.mismatches.push_back(std::move(m));
        }
    }

    for (const Scenario::ReferenceNote& n : s.reference_notes) {
        std::string line = n.note;
        if (!n.quantity.empty() && n.reference_value) {
            auto it = r.computed.find(n.quantity);
            line = n.quantity + ": reference " + n.reference_value->str() + ", computed " +
                   (it == r.computed.end() ? std::string("-") : it->second.str()) + ". " + line;
        }
        r.notes.push_back(std::move(line));
    }

    if (emit_chambers)
        r.threefold_chambers = tf;
    return r;
}

json poly_json(const Polynomial& p) {
    json a = json::array();
    for (const Rat& c : p.coeffs())
        a.push_back(c.str());
    return a;
}

} // namespace

Report run_report(const Scenario& s, bool emit_chambers) {
    try {
        return run_report_impl(s, emit_chambers);
    } catch (const Error&) {
        std::throw_with_nested(Error("while running scenario " + s.name));
    }
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario << "\n";
    os << "  tau          = " << r.tau.str() << "\n";
    os << "  S_X(S)       = " << r.s_x.str() << "\n";
    if (r.curve_flag) {
        os << "  S(W;C)       = " << r.curve_flag->total.str() << "   (d-term "
           << r.curve_flag->first_term.str() << " + volume term "
           << r.curve_flag->double_term.str() << ")\n";
    }
    if (r.s_wf) {
        os << "  S(W;F)       = " << r.s_wf->str() << "   (d-term " << r.s_wf_first->str()
           << ")\n";
        os << "  quad term    = " << r.s_wo_quad->str() << "\n";
        for (const auto& p : r.profiles)
            os << "  O: " << p.name << "\n       F_O = " << p.f_o.str()
               << "   S(W;O) = " << p.s_o.str() << "\n";
    }
    os << "  verdict      = " << (r.certified ? "certified" : "NOT certified") << "\n";
    for (const auto& m : r.mismatches)
        os << "  MISMATCH " << m.key << ": expected " << m.expected.str() << ", computed "
           << m.computed.str() << "\n";
    for (const auto& n : r.notes)
        os << "  note: " << n << "\n";
    if (r.threefold_chambers) {
        os << "  chambers (threefold sweep):\n";
        for (const Chamber& ch : r.threefold_chambers->chambers) {
            os << "    [" << ch.lo.str() << ", " << ch.hi.str() << "]  vol = " << ch.vol.str()
               << "\n";
            for (const auto& [name, c] : ch.negative_coeffs)
                os << "      N: " << name << " * (" << c.str() << ")\n";
        }
    }
    return os.str();
}

std::string report_json(const Report& r) {
    json j;
    j["scenario"] = r.scenario;
    json values = json::object();
    for (const auto& [key, val] : r.computed)
        values[key] = val.str();
    j["values"] = values;
    j["certified"] = r.certified;
    if (!r.mismatches.empty()) {
        json ms = json::array();
        for (const auto& m : r.mismatches) {
            json mj;
            mj["key"] = m.key;
            mj["expected"] = m.expected.str();
            mj["computed"] = m.computed.str();
            ms.push_back(mj);
        }
        j["mismatches"] = ms;
    }
    if (!r.notes.empty())
        j["notes"] = r.notes;
    if (r.threefold_chambers) {
        json chs = json::array();
        for (const Chamber& ch : r.threefold_chambers->chambers) {
            json cj;
            cj["lo"] = ch.lo.str();
            cj["hi"] = ch.hi.str();
            cj["vol"] = poly_json(ch.vol);
            json neg = json::object();
            for (const auto& [name, c] : ch.negative_coeffs)
                neg[name] = poly_json(c);
            cj["negative"] = neg;
            json pos = json::array();
            for (const Polynomial& p : ch.positive)
                pos.push_back(poly_json(p));
            cj["positive"] = pos;
            chs.push_back(cj);
        }
        j["chambers"] = chs;
        j["tau"] = r.threefold_chambers->tau.str();
    }
    return j.dump(2) + "\n";
}

RegressionSummary regression_check(std::ostream* log) {
    RegressionSummary sum;
    for (const Scenario& s : builtin_catalog()) {
        ++sum.scenarios;
        Report r;
        try {
            r = run_report(s);
        } catch (const Error& e) {
            sum.failures.push_back(s.name + ": error: " + e.what());
            if (log)
                *log << "[fail] " << s.name << " (error)\n";
            continue;
        }
        sum.matched_values +=
            static_cast<int>(s.expected.size()) - static_cast<int>(r.mismatches.size());
        if (r.certified)
            ++sum.certified;
        else
            sum.failures.push_back(s.name + ": verdict not certified");
        for (const auto& m : r.mismatches)
            sum.failures.push_back(s.name + ": " + m.key + " expected " + m.expected.str() +
                                   ", computed " + m.computed.str());
        if (log)
            *log << (r.mismatches.empty() && r.certified ? "[ ok ] " : "[fail] ") << s.name
                 << "  (" << s.expected.size() << " anchors)\n";
    }
    sum.pass = sum.failures.empty();
    return sum;
}

} // namespace deltakit
