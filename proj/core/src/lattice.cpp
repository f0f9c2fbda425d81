#include <deltakit/lattice.hpp>

#include <algorithm>

namespace deltakit {

std::shared_ptr<const SurfaceLattice> SurfaceLattice::make(std::vector<std::string> names,
                                                           std::vector<std::vector<Rat>> gram,
                                                           bool hodge) {
    const std::size_t n = names.size();
    if (gram.size() != n)
        throw ValidationError("lattice: form row count != basis size");
    for (const auto& row : gram)
        if (row.size() != n)
            throw ValidationError("lattice: form is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw ValidationError("lattice: form not symmetric at (" + names[i] + "," +
                                      names[j] + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names[i] == names[j])
                throw ValidationError("lattice: duplicate generator name " + names[i]);
    if (hodge) {
        Signature sig = symmetric_signature(gram);
        if (sig.positive != 1 || sig.zero != 0)
            throw ValidationError("lattice flagged hodge has signature (" +
                                  std::to_string(sig.positive) + "," +
                                  std::to_string(sig.negative) + "," + std::to_string(sig.zero) +
                                  "), expected (1," + std::to_string(n - 1) + ",0)");
    }
    return std::shared_ptr<const SurfaceLattice>(
        new SurfaceLattice(std::move(names), std::move(gram), hodge));
}

std::size_t SurfaceLattice::index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    throw UnknownClass("no generator named \"" + std::string(name) + "\" in lattice");
}

bool SurfaceLattice::has(std::string_view name) const {
    return std::any_of(names_.begin(), names_.end(),
                       [&](const std::string& n) { return n == name; });
}

Signature symmetric_signature(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i].is_zero()) {
            // Prefer a congruent swap with a later nonzero diagonal entry;
            // otherwise mix in a row with a nonzero off-diagonal pairing.
            std::size_t j = i + 1;
            for (; j < n; ++j)
                if (!m[j][j].is_zero())
                    break;
            if (j < n) {
                std::swap(m[i], m[j]);
                for (auto& row : m)
                    std::swap(row[i], row[j]);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (!m[i][j].is_zero())
                        break;
                if (j == n) {
                    ++sig.zero;
                    continue;
                }
                // e_i := e_i + e_j gives diagonal entry 2 m[i][j] != 0.
                for (std::size_t k = 0; k < n; ++k)
                    m[i][k] += m[j][k];
                for (std::size_t k = 0; k < n; ++k)
                    m[k][i] += m[k][j];
            }
        }
        const Rat d = m[i][i];
        d.sign() > 0 ? ++sig.positive : ++sig.negative;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j].is_zero())
                continue;
            const Rat f = m[i][j] / d;
            for (std::size_t k = 0; k < n; ++k)
                m[j][k] -= f * m[i][k];
            for (std::size_t k = 0; k < n; ++k)
                m[k][j] -= f * m[k][i];
        }
    }
    return sig;
}

DivisorClass::DivisorClass(LatticePtr lat, std::vector<Rat> c)
    : lattice(std::move(lat)), coeffs(std::move(c)) {
    if (coeffs.size() != lattice->rank())
        throw ValidationError("divisor class: coefficient length != basis size");
}

DivisorClass DivisorClass::zero(const LatticePtr& lat) {
    return DivisorClass(lat, std::vector<Rat>(lat->rank(), Rat(0)));
}

DivisorClass DivisorClass::generator(const LatticePtr& lat, std::string_view name) {
    auto c = std::vector<Rat>(lat->rank(), Rat(0));
    c[lat->index(name)] = Rat(1);
    return DivisorClass(lat, std::move(c));
}

bool DivisorClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c.is_zero(); });
}

static void check_same(const DivisorClass& a, const DivisorClass& b) {
    if (a.lattice != b.lattice)
        throw LatticeMismatch("divisor classes on different lattices");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] += o.coeffs[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    check_same(*this, o);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] -= o.coeffs[i];
    return *this;
}

DivisorClass DivisorClass::scaled(const Rat& s) const {
    DivisorClass out(*this);
    for (auto& c : out.coeffs)
        c *= s;
    return out;
}

std::string DivisorClass::str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        if (!s.empty())
            s += coeffs[i].sign() > 0 ? " + " : " - ";
        else if (coeffs[i].sign() < 0)
            s += "-";
        Rat a = coeffs[i].abs();
        if (a != Rat(1))
            s += a.str() + "*";
        s += lattice->name(i);
    }
    return s.empty() ? "0" : s;
}

Rat pair(const DivisorClass& a, const DivisorClass& b) {
    check_same(a, b);
    Rat acc(0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero())
                continue;
            acc += a.coeffs[i] * b.coeffs[j] * a.lattice->form(i, j);
        }
    }
    return acc;
}

BlowUp blow_up_point(const LatticePtr& lat, const std::map<std::string, int>& mults,
                     const std::vector<CurveRecord>& curves, const std::string& f_name) {
    for (const auto& [name, m] : mults) {
        if (m < 0)
            throw ValidationError("blow-up multiplicity of " + name + " is negative");
        bool found = std::any_of(curves.begin(), curves.end(),
                                 [&](const CurveRecord& c) { return c.name == name; });
        if (!found)
            throw UnknownClass("blow-up multiplicity given for unknown curve " + name);
    }
    std::vector<std::string> names = lat->names();
    names.push_back(f_name);
    const std::size_t n = lat->rank();
    std::vector<std::vector<Rat>> gram(n + 1, std::vector<Rat>(n + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = lat->form(i, j);
    gram[n][n] = Rat(-1);
    return BlowUp{SurfaceLattice::make(std::move(names), std::move(gram), lat->hodge()), f_name};
}

DivisorClass BlowUp::pullback(const DivisorClass& c) const {
    std::vector<Rat> out = c.coeffs;
    out.push_back(Rat(0));
    return DivisorClass(blown, std::move(out));
}

DivisorClass BlowUp::strict_transform(const DivisorClass& c, int mult) const {
    std::vector<Rat> out = c.coeffs;
    out.push_back(Rat(-mult));
    return DivisorClass(blown, std::move(out));
}

std::vector<CurveRecord> transform_curves(const BlowUp& bl, const std::vector<CurveRecord>& curves,
                                          const std::map<std::string, int>& mults) {
    std::vector<CurveRecord> out;
    out.reserve(curves.size());
    for (const CurveRecord& c : curves) {
        auto it = mults.find(c.name);
        const int m = it == mults.end() ? 0 : it->second;
        CurveRecord t;
        t.name = c.name;
        t.cls = bl.strict_transform(c.cls, m);
        t.bundle_size = c.bundle_size;
        t.f_mult = m;
        t.negative_candidate = pair(t.cls, t.cls).sign() < 0;
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace deltakit
