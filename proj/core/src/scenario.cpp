#include <deltakit/scenario.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace deltakit {

using nlohmann::json;

AlgebraPtr Scenario::make_algebra() const {
    return ThreefoldAlgebra::make(threefold.basis, threefold.cubes, threefold.relations,
                                  threefold.walls);
}

LatticePtr Scenario::make_surface() const {
    if (!surface)
        throw ValidationError("scenario " + name + " has no surface block");
    return SurfaceLattice::make(surface->basis, surface->gram, surface->hodge);
}

std::vector<CurveRecord> Scenario::make_curves(const LatticePtr& lat) const {
    std::vector<CurveRecord> out;
    if (!surface)
        return out;
    out.reserve(surface->curves.size());
    for (const Curve& c : surface->curves) {
        CurveRecord r;
        r.name = c.name;
        r.cls = DivisorClass(lat, c.coeffs);
        r.negative_candidate = c.negative_candidate;
        r.bundle_size = c.bundle_size;
        r.f_mult = c.mult_p;
        out.push_back(std::move(r));
    }
    return out;
}

std::map<std::string, int> Scenario::blow_mults() const {
    std::map<std::string, int> m;
    if (surface)
        for (const Curve& c : surface->curves)
            m[c.name] = c.mult_p;
    return m;
}

void validate_scenario(const Scenario& s) {
    auto fail = [&](const std::string& field, const std::string& what) {
        throw ValidationError("scenario " + s.name + ", " + field + ": " + what);
    };

    AlgebraPtr alg;
    try {
        alg = s.make_algebra();
    } catch (const Error& e) {
        fail("threefold", e.what());
    }
    ThreefoldClass mk;
    try {
        mk = expand_relation(alg, s.threefold.minus_k);
    } catch (const Error& e) {
        fail("threefold.minus_k", e.what());
    }
    if (triple(mk, mk, mk) != s.threefold.minus_k_cubed)
        fail("threefold.minus_k_cubed", "cube constants give (-K)^3 = " +
                                            triple(mk, mk, mk).str() + ", declared " +
                                            s.threefold.minus_k_cubed.str());
    try {
        expand_relation(alg, s.ray);
    } catch (const Error& e) {
        fail("ray", e.what());
    }
    for (const auto& w : s.threefold.walls) {
        int vanishing = 0;
        for (const auto& w2 : s.threefold.walls) {
            ThreefoldClass gen = expand_relation(alg, w2.nef_generator);
            const Rat phi = gen.pair_wall(w);
            if (phi.sign() < 0)
                fail("threefold.walls", "functional of " + w.curve +
                                            " negative on nef generator " + w2.nef_generator);
            if (phi.is_zero())
                ++vanishing;
        }
        if (vanishing != 1)
            fail("threefold.walls", "functional of " + w.curve + " vanishes on " +
                                        std::to_string(vanishing) + " nef generators, not 1");
    }

    if (s.flag != Scenario::FlagKind::none) {
        if (!s.surface)
            fail("surface", "flag scenarios need a surface block");
        if (!s.restriction)
            fail("restriction", "flag scenarios need a restriction matrix");
        LatticePtr lat;
        try {
            lat = s.make_surface();
        } catch (const Error& e) {
            fail("surface", e.what());
        }
        if ((*s.restriction)[0].size() != lat->rank() || (*s.restriction)[1].size() != lat->rank())
            fail("restriction", "matrix width != surface rank");
        auto curves = s.make_curves(lat);
        for (const CurveRecord& c : curves)
            if (c.negative_candidate && !(pair(c.cls, c.cls).sign() < 0))
                fail("surface.curves." + c.name,
                     "negativity candidate with self-intersection " + pair(c.cls, c.cls).str());
        auto find_curve = [&](const std::string& n) {
            for (const CurveRecord& c : curves)
                if (c.name == n)
                    return true;
            return false;
        };
        if (s.flag == Scenario::FlagKind::curve) {
            if (!find_curve(s.flag_curve))
                fail("flag.curve", "unknown curve " + s.flag_curve);
            for (const auto& [name, bound] : s.ord_bounds) {
                try {
                    expand_relation(alg, name);
                } catch (const Error& e) {
                    fail("ord_bounds." + name, e.what());
                }
                if (bound.sign() < 0)
                    fail("ord_bounds." + name, "negative bound");
            }
        }
        if (s.flag == Scenario::FlagKind::point) {
            auto mults = s.blow_mults();
            for (const NRestrictionEntry& e : s.n_restrictions) {
                try {
                    expand_relation(alg, e.threefold_class);
                } catch (const Error& err) {
                    fail("n_restrictions", err.what());
                }
                if (!find_curve(e.curve))
                    fail("n_restrictions", "unknown curve " + e.curve);
                if (e.mult_at_p != mults.at(e.curve))
                    fail("n_restrictions",
                         "mult_at_p of " + e.curve + " disagrees with the curve's mult_p");
            }
            for (const Scenario::Profile& p : s.profiles)
                for (const auto& [cname, m] : p.mults) {
                    if (!find_curve(cname))
                        fail("profiles." + p.name, "unknown curve " + cname);
                    if (m < 0)
                        fail("profiles." + p.name, "negative local multiplicity");
                    if (m > mults.at(cname))
                        fail("profiles." + p.name, "local multiplicity of " + cname +
                                                       " exceeds its pairing with F (" +
                                                       std::to_string(mults.at(cname)) + ")");
                }
        }
    }
}

// ----------------------------------------------------------------- JSON ----

namespace {

Rat rat_field(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path + ": expected a \"p/q\" string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<Rat> rat_array(const json& j, const std::string& path) {
    if (!j.is_array())
        throw ParseError(path + ": expected an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rat_field(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}


json rats_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v)
        a.push_back(r.str());
    return a;
}

const json& need(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(path + ": missing field \"" + std::string(key) + "\"");
    return *it;
}

} // namespace

Scenario scenario_from_json_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    Scenario s;
    try {
        s.name = need(j, "name", "$").get<std::string>();
        s.description = j.value("description", "");

        const json& tf = need(j, "threefold", "$");
        const json& basis = need(tf, "basis", "$.threefold");
        s.threefold.basis = {basis.at(0).get<std::string>(), basis.at(1).get<std::string>()};
        const json& cubes = need(tf, "cubes", "$.threefold");
        for (int k = 0; k < 4; ++k)
            s.threefold.cubes[static_cast<std::size_t>(k)] =
                rat_field(cubes.at(static_cast<std::size_t>(k)),
                          "$.threefold.cubes[" + std::to_string(k) + "]");
        for (const auto& [name, val] : need(tf, "relations", "$.threefold").items()) {
            std::vector<Rat> v = rat_array(val, "$.threefold.relations." + name);
            if (v.size() != 2)
                throw ParseError("$.threefold.relations." + name + ": expected 2 coefficients");
            s.threefold.relations[name] = {v[0], v[1]};
        }
        for (const json& w : need(tf, "walls", "$.threefold")) {
            ThreefoldAlgebra::Wall wall;
            wall.curve = need(w, "curve", "$.threefold.walls[]").get<std::string>();
            std::vector<Rat> p = rat_array(need(w, "pairing", "$.threefold.walls[]"),
                                           "$.threefold.walls[].pairing");
            if (p.size() != 2)
                throw ParseError("$.threefold.walls[].pairing: expected 2 entries");
            wall.pairing = {p[0], p[1]};
            wall.nef_generator = need(w, "nef_generator", "$.threefold.walls[]").get<std::string>();
            wall.effective = need(w, "effective", "$.threefold.walls[]").get<std::string>();
            s.threefold.walls.push_back(std::move(wall));
        }
        s.threefold.minus_k = need(tf, "minus_k", "$.threefold").get<std::string>();
        s.threefold.minus_k_cubed =
            rat_field(need(tf, "minus_k_cubed", "$.threefold"), "$.threefold.minus_k_cubed");

        s.ray = need(j, "ray", "$").get<std::string>();
        if (j.contains("tau_hint"))
            s.tau_hint = rat_field(j["tau_hint"], "$.tau_hint");

        if (j.contains("restriction")) {
            const json& m = j["restriction"];
            RestrictionMatrix rm;
            rm[0] = rat_array(m.at(0), "$.restriction[0]");
            rm[1] = rat_array(m.at(1), "$.restriction[1]");
            s.restriction = std::move(rm);
        }

        if (j.contains("surface")) {
            const json& sj = j["surface"];
            Scenario::Surface surf;
            for (const json& b : need(sj, "basis", "$.surface"))
                surf.basis.push_back(b.get<std::string>());
            for (std::size_t r = 0; r < need(sj, "gram", "$.surface").size(); ++r)
                surf.gram.push_back(
                    rat_array(sj["gram"][r], "$.surface.gram[" + std::to_string(r) + "]"));
            surf.hodge = sj.value("hodge", false);
            if (sj.contains("curves"))
                for (const json& cj : sj["curves"]) {
                    Scenario::Curve c;
                    c.name = need(cj, "name", "$.surface.curves[]").get<std::string>();
                    c.coeffs = rat_array(need(cj, "class", "$.surface.curves[]"),
                                         "$.surface.curves[].class");
                    c.negative_candidate = cj.value("negative_candidate", false);
                    c.bundle_size = cj.value("bundle_size", 1);
                    c.mult_p = cj.value("mult_p", 0);
                    surf.curves.push_back(std::move(c));
                }
            s.surface = std::move(surf);
        }

        const std::string kind = need(j, "flag", "$").is_object()
                                     ? need(j["flag"], "kind", "$.flag").get<std::string>()
                                     : j["flag"].get<std::string>();
        if (kind == "none")
            s.flag = Scenario::FlagKind::none;
        else if (kind == "curve")
            s.flag = Scenario::FlagKind::curve;
        else if (kind == "point")
            s.flag = Scenario::FlagKind::point;
        else
            throw ParseError("$.flag.kind: unknown kind \"" + kind + "\"");
        if (s.flag == Scenario::FlagKind::curve)
            s.flag_curve = need(j["flag"], "curve", "$.flag").get<std::string>();

        if (j.contains("ord_bounds"))
            for (const auto& [name, val] : j["ord_bounds"].items())
                s.ord_bounds[name] = rat_field(val, "$.ord_bounds." + name);

        if (j.contains("n_restrictions"))
            for (const json& ej : j["n_restrictions"]) {
                NRestrictionEntry e;
                e.threefold_class = need(ej, "class", "$.n_restrictions[]").get<std::string>();
                e.curve = need(ej, "curve", "$.n_restrictions[]").get<std::string>();
                e.mult_at_p = need(ej, "mult_p", "$.n_restrictions[]").get<int>();
                s.n_restrictions.push_back(std::move(e));
            }

        if (j.contains("profiles"))
            for (const json& pj : j["profiles"]) {
                Scenario::Profile p;
                p.name = need(pj, "name", "$.profiles[]").get<std::string>();
                if (pj.contains("mults"))
                    for (const auto& [cname, m] : pj["mults"].items())
                        p.mults[cname] = m.get<int>();
                s.profiles.push_back(std::move(p));
            }

        if (j.contains("expected"))
            for (const auto& [key, val] : j["expected"].items())
                s.expected[key] = rat_field(val, "$.expected." + key);

        if (j.contains("reference_notes"))
            for (const json& nj : j["reference_notes"]) {
                Scenario::ReferenceNote n;
                n.quantity = nj.value("quantity", "");
                if (nj.contains("value"))
                    n.reference_value = rat_field(nj["value"], "$.reference_notes[].value");
                n.note = need(nj, "note", "$.reference_notes[]").get<std::string>();
                s.reference_notes.push_back(std::move(n));
            }

        if (j.contains("assumptions"))
            for (const json& aj : j["assumptions"])
                s.assumptions.push_back(aj.get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    validate_scenario(s);
    return s;
}

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    if (!s.description.empty())
        j["description"] = s.description;

    json tf;
    tf["basis"] = {s.threefold.basis[0], s.threefold.basis[1]};
    tf["cubes"] = {s.threefold.cubes[0].str(), s.threefold.cubes[1].str(),
                   s.threefold.cubes[2].str(), s.threefold.cubes[3].str()};
    json rel = json::object();
    for (const auto& [name, v] : s.threefold.relations)
        rel[name] = {v[0].str(), v[1].str()};
    tf["relations"] = rel;
    json walls = json::array();
    for (const auto& w : s.threefold.walls) {
        json wj;
        wj["curve"] = w.curve;
        wj["pairing"] = {w.pairing[0].str(), w.pairing[1].str()};
        wj["nef_generator"] = w.nef_generator;
        wj["effective"] = w.effective;
        walls.push_back(wj);
    }
    tf["walls"] = walls;
    tf["minus_k"] = s.threefold.minus_k;
    tf["minus_k_cubed"] = s.threefold.minus_k_cubed.str();
    j["threefold"] = tf;

    j["ray"] = s.ray;
    if (s.tau_hint)
        j["tau_hint"] = s.tau_hint->str();
    if (s.restriction) {
        json rm = json::array();
        rm.push_back(rats_to_json((*s.restriction)[0]));
        rm.push_back(rats_to_json((*s.restriction)[1]));
        j["restriction"] = rm;
    }
    if (s.surface) {
        json sj;
        sj["basis"] = s.surface->basis;
        json gram = json::array();
        for (const auto& row : s.surface->gram)
            gram.push_back(rats_to_json(row));
        sj["gram"] = gram;
        sj["hodge"] = s.surface->hodge;
        json curves = json::array();
        for (const auto& c : s.surface->curves) {
            json cj;
            cj["name"] = c.name;
            cj["class"] = rats_to_json(c.coeffs);
            if (c.negative_candidate)
                cj["negative_candidate"] = true;
            if (c.bundle_size != 1)
                cj["bundle_size"] = c.bundle_size;
            if (c.mult_p != 0)
                cj["mult_p"] = c.mult_p;
            curves.push_back(cj);
        }
        sj["curves"] = curves;
        j["surface"] = sj;
    }

    json flag;
    flag["kind"] = s.flag == Scenario::FlagKind::none
                       ? "none"
                       : (s.flag == Scenario::FlagKind::curve ? "curve" : "point");
    if (s.flag == Scenario::FlagKind::curve)
        flag["curve"] = s.flag_curve;
    j["flag"] = flag;

    if (!s.ord_bounds.empty()) {
        json ob = json::object();
        for (const auto& [name, bound] : s.ord_bounds)
            ob[name] = bound.str();
        j["ord_bounds"] = ob;
    }
    if (!s.n_restrictions.empty()) {
        json nr = json::array();
        for (const auto& e : s.n_restrictions) {
            json ej;
            ej["class"] = e.threefold_class;
            ej["curve"] = e.curve;
            ej["mult_p"] = e.mult_at_p;
            nr.push_back(ej);
        }
        j["n_restrictions"] = nr;
    }
    if (!s.profiles.empty()) {
        json ps = json::array();
        for (const auto& p : s.profiles) {
            json pj;
            pj["name"] = p.name;
            json m = json::object();
            for (const auto& [cname, mult] : p.mults)
                m[cname] = mult;
            pj["mults"] = m;
            ps.push_back(pj);
        }
        j["profiles"] = ps;
    }
    if (!s.expected.empty()) {
        json e = json::object();
        for (const auto& [key, val] : s.expected)
            e[key] = val.str();
        j["expected"] = e;
    }
    if (!s.reference_notes.empty()) {
        json notes = json::array();
        for (const auto& n : s.reference_notes) {
            json nj;
            if (!n.quantity.empty())
                nj["quantity"] = n.quantity;
            if (n.reference_value)
                nj["value"] = n.reference_value->str();
            nj["note"] = n.note;
            notes.push_back(nj);
        }
        j["reference_notes"] = notes;
    }
    if (!s.assumptions.empty())
        j["assumptions"] = s.assumptions;

    return j.dump(2) + "\n";
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open scenario file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_json_text(ss.str(), path);
}

void save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write scenario file " + path);
    out << scenario_to_json(s);
}

bool scenario_equal(const Scenario& a, const Scenario& b) {
    return scenario_to_json(a) == scenario_to_json(b);
}

} // namespace deltakit
