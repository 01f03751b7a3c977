#include "lieloc/liealg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace lieloc::liealg {

using exactfield::belongs_to;
using linalg::Matrix;

namespace {

// Merge duplicate basis indices, drop zeros, sort by basis.
std::vector<Term> normalize_terms(std::vector<Term> terms, std::size_t dim, FieldTag field) {
    std::map<std::size_t, GaussianRational> acc;
    for (auto& t : terms) {
        if (t.basis >= dim) throw InvalidArgument("bracket term index out of range");
        if (!belongs_to(t.coeff, field)) throw FieldMismatch("non-real coefficient " + t.coeff.to_string() + " in field Q");
        acc[t.basis] += t.coeff;
    }
    std::vector<Term> out;
    for (auto& [k, v] : acc) {
        if (!v.is_zero()) out.push_back({k, std::move(v)});
    }
    return out;
}

// Adds coeff * [b_i, b_j] into the dense accumulator.
void add_bracket(std::vector<GaussianRational>& acc, const StructureConstants& c, std::size_t i, std::size_t j,
                 const GaussianRational& coeff) {
    for (const auto& t : c.get(i, j)) acc[t.basis] += coeff * t.coeff;
}

// [[a,b],c] as a dense vector.
std::vector<GaussianRational> double_bracket(const StructureConstants& c, std::size_t a, std::size_t b, std::size_t d) {
    std::vector<GaussianRational> out(c.dim());
    for (const auto& t : c.get(a, b)) add_bracket(out, c, t.basis, d, t.coeff);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// StructureConstants

void StructureConstants::set(std::size_t i, std::size_t j, std::vector<Term> terms) {
    if (i >= dim_ || j >= dim_) throw InvalidArgument("bracket index out of range");
    table_[i * dim_ + j] = normalize_terms(std::move(terms), dim_, field_);
}

void StructureConstants::set_antisymmetric(std::size_t i, std::size_t j, const std::vector<Term>& terms) {
    set(i, j, terms);
    std::vector<Term> neg = get(i, j);
    for (auto& t : neg) t.coeff = -t.coeff;
    set(j, i, std::move(neg));
}

Vector StructureConstants::bracket_vector(std::size_t i, std::size_t j) const {
    Vector v(dim_, field_);
    for (const auto& t : get(i, j)) v.set(t.basis, t.coeff);
    return v;
}

// ---------------------------------------------------------------------------
// Jacobi

std::string JacobiVerdict::describe(const std::vector<std::string>& labels) const {
    auto name = [&](std::size_t x) { return x < labels.size() ? labels[x] : std::to_string(x); };
    switch (failure) {
        case Failure::None:
            return "ok";
        case Failure::Antisymmetry:
            return "antisymmetry fails at (" + name(i) + ", " + name(j) + ")";
        case Failure::Jacobi:
            return "Jacobi identity fails at (" + name(i) + ", " + name(j) + ", " + name(k) + ")";
    }
    return "unknown";
}

JacobiVerdict check_jacobi(const StructureConstants& c) {
    const std::size_t d = c.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            std::vector<GaussianRational> sum(d);
            for (const auto& t : c.get(i, j)) sum[t.basis] += t.coeff;
            for (const auto& t : c.get(j, i)) sum[t.basis] += t.coeff;
            for (const auto& v : sum) {
                if (!v.is_zero()) return {JacobiVerdict::Failure::Antisymmetry, i, j, 0};
            }
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            for (std::size_t e = b + 1; e < d; ++e) {
                auto s = double_bracket(c, a, b, e);
                const auto s2 = double_bracket(c, b, e, a);
                const auto s3 = double_bracket(c, e, a, b);
                for (std::size_t k = 0; k < d; ++k) {
                    s[k] += s2[k];
                    s[k] += s3[k];
                    if (!s[k].is_zero()) return {JacobiVerdict::Failure::Jacobi, a, b, e};
                }
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra LieAlgebra::create(std::string name, std::vector<std::string> labels, StructureConstants constants) {
    if (labels.size() != constants.dim()) {
        throw InvalidAlgebra("label count " + std::to_string(labels.size()) + " does not match dimension " +
                             std::to_string(constants.dim()));
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw InvalidAlgebra("empty basis label");
        if (!seen.insert(l).second) throw InvalidAlgebra("duplicate basis label '" + l + "'");
    }
    const JacobiVerdict v = check_jacobi(constants);
    if (!v.ok()) throw InvalidAlgebra(v.describe(labels));
    return LieAlgebra(std::make_shared<const Data>(Data{std::move(name), std::move(labels), std::move(constants)}));
}

std::optional<std::size_t> LieAlgebra::find(const std::string& label) const {
    const auto& ls = d_->labels;
    const auto it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) return std::nullopt;
    return static_cast<std::size_t>(it - ls.begin());
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
    const auto k = find(label);
    if (!k) throw InvalidArgument("unknown basis label '" + label + "' in " + name());
    return *k;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.same_as(b)) return true;
    return a.name() == b.name() && a.labels() == b.labels() && a.constants() == b.constants();
}

LieAlgebra LieAlgebra::embed() const {
    if (field() == FieldTag::Qi) return *this;
    StructureConstants c(dim(), FieldTag::Qi);
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            if (!constants().get(i, j).empty()) c.set(i, j, constants().get(i, j));
        }
    }
    return LieAlgebra(std::make_shared<const Data>(Data{name(), labels(), std::move(c)}));
}

LieAlgebra LieAlgebra::restrict(const std::vector<std::size_t>& indices, std::string new_name) const {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= dim()) throw InvalidArgument("restrict: index out of range");
        if (!pos.emplace(indices[k], k).second) throw InvalidArgument("restrict: repeated index");
    }
    StructureConstants c(indices.size(), field());
    std::vector<std::string> new_labels;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        new_labels.push_back(label(indices[a]));
        for (std::size_t b = 0; b < indices.size(); ++b) {
            std::vector<Term> terms;
            for (const auto& t : constants().get(indices[a], indices[b])) {
                const auto it = pos.find(t.basis);
                if (it == pos.end()) throw InvalidArgument("restrict: span is not closed under the bracket");
                terms.push_back({it->second, t.coeff});
            }
            c.set(a, b, std::move(terms));
        }
    }
    return create(std::move(new_name), std::move(new_labels), std::move(c));
}

// ---------------------------------------------------------------------------
// Element

Element::Element(LieAlgebra algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_.dim()) throw DimensionMismatch("element length does not match algebra dimension");
    if (coords_.field() != algebra_.field()) throw FieldMismatch("element field does not match algebra field");
}

std::string format_combination(const std::vector<std::pair<std::string, GaussianRational>>& terms) {
    std::string out;
    for (const auto& [label, c] : terms) {
        if (c.is_zero()) continue;
        std::string term;
        if (c.is_one()) {
            term = label;
        } else if ((-c).is_one()) {
            term = "-" + label;
        } else {
            std::string cs = c.to_string();
            // Mixed a+bi coefficients need parentheses.
            if (!c.re().is_zero() && !c.im().is_zero()) cs = "(" + cs + ")";
            term = cs + "*" + label;
        }
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string Element::to_string() const {
    std::vector<std::pair<std::string, GaussianRational>> terms;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (!coords_[k].is_zero()) terms.emplace_back(algebra_.label(k), coords_[k]);
    }
    return format_combination(terms);
}

namespace {
void require_same_algebra(const Element& a, const Element& b) {
    if (!a.algebra().same_as(b.algebra()) && !(a.algebra() == b.algebra())) {
        throw InvalidArgument("elements belong to different algebras");
    }
}
}  // namespace

Element& Element::operator+=(const Element& o) {
    require_same_algebra(*this, o);
    coords_ += o.coords_;
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_algebra(*this, o);
    coords_ -= o.coords_;
    return *this;
}

Element operator*(const Scalar& s, Element x) {
    x.coords_ *= s;
    return x;
}

bool operator==(const Element& a, const Element& b) { return a.algebra_ == b.algebra_ && a.coords_ == b.coords_; }

Element bracket(const Element& x, const Element& y) {
    require_same_algebra(x, y);
    const LieAlgebra& l = x.algebra();
    const std::size_t d = l.dim();
    std::vector<GaussianRational> acc(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& xi = x.coords()[i];
        if (xi.is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            const auto& yj = y.coords()[j];
            if (yj.is_zero()) continue;
            if (l.constants().get(i, j).empty()) continue;
            add_bracket(acc, l.constants(), i, j, xi * yj);
        }
    }
    return {l, Vector(l.field(), std::move(acc))};
}

LinearMap ad(const Element& x) {
    const LieAlgebra& l = x.algebra();
    const std::size_t d = l.dim();
    LinearMap m(d, l.field());
    for (std::size_t b = 0; b < d; ++b) {
        std::vector<GaussianRational> col(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!x.coords()[i].is_zero()) add_bracket(col, l.constants(), i, b, x.coords()[i]);
        }
        for (std::size_t a = 0; a < d; ++a) {
            if (!col[a].is_zero()) m.set(a, b, col[a]);
        }
    }
    return m;
}

Subspace center(const LieAlgebra& l) {
    // x is central iff [x, b_j] = 0 for every j: sum_i x_i c_ij^k = 0 for all (j, k).
    const std::size_t d = l.dim();
    Matrix m(d * d, d, l.field());
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& t : l.constants().get(i, j)) m.set(j * d + t.basis, i, t.coeff);
        }
    }
    return linalg::nullspace(m);
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

void put(StructureConstants& c, std::size_t i, std::size_t j, std::size_t k, long coeff) {
    c.set_antisymmetric(i, j, {{k, GaussianRational(coeff)}});
}

void require_rank(std::size_t n, const char* what) {
    if (n == 0) throw InvalidArgument(std::string(what) + ": n must be at least 1");
}

}  // namespace

LieAlgebra make_schrodinger(std::size_t n, FieldTag field) {
    require_rank(n, "make_schrodinger");
    const std::size_t e = 0, h = 1, f = 2, z = 3;
    auto u = [](std::size_t j) { return 4 + j; };
    auto v = [n](std::size_t j) { return 4 + n + j; };
    StructureConstants c(2 * n + 4, field);
    put(c, h, e, e, 2);
    put(c, h, f, f, -2);
    put(c, e, f, h, 1);
    std::vector<std::string> labels{"e", "h", "f", "z"};
    for (std::size_t j = 0; j < n; ++j) labels.push_back("u_" + std::to_string(j + 1));
    for (std::size_t j = 0; j < n; ++j) labels.push_back("v_" + std::to_string(j + 1));
    for (std::size_t j = 0; j < n; ++j) {
        put(c, u(j), v(j), z, 1);
        put(c, h, u(j), u(j), 1);
        put(c, h, v(j), v(j), -1);
        put(c, e, v(j), u(j), 1);
        put(c, f, u(j), v(j), 1);
    }
    return LieAlgebra::create("S_" + std::to_string(n), std::move(labels), std::move(c));
}

LieAlgebra make_heisenberg(std::size_t n, FieldTag field) {
    require_rank(n, "make_heisenberg");
    StructureConstants c(2 * n + 1, field);
    std::vector<std::string> labels{"z"};
    for (std::size_t j = 0; j < n; ++j) labels.push_back("u_" + std::to_string(j + 1));
    for (std::size_t j = 0; j < n; ++j) labels.push_back("v_" + std::to_string(j + 1));
    for (std::size_t j = 0; j < n; ++j) put(c, 1 + j, 1 + n + j, 0, 1);
    return LieAlgebra::create("h_" + std::to_string(n), std::move(labels), std::move(c));
}

LieAlgebra make_sl2(FieldTag field) {
    StructureConstants c(3, field);
    put(c, 1, 0, 0, 2);
    put(c, 1, 2, 2, -2);
    put(c, 0, 2, 1, 1);
    return LieAlgebra::create("sl_2", {"e", "h", "f"}, std::move(c));
}

LieAlgebra make_abelian(std::size_t k, FieldTag field) {
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < k; ++j) labels.push_back("x_" + std::to_string(j + 1));
    return LieAlgebra::create("abelian_" + std::to_string(k), std::move(labels), StructureConstants(k, field));
}

std::optional<std::size_t> schrodinger_rank(const LieAlgebra& l) {
    if (l.dim() < 6 || l.dim() % 2 != 0) return std::nullopt;
    const std::size_t n = (l.dim() - 4) / 2;
    const LieAlgebra ref = make_schrodinger(n, l.field());
    if (ref.labels() != l.labels() || !(ref.constants() == l.constants())) return std::nullopt;
    return n;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::ordered_json to_json(const LieAlgebra& l) {
    nlohmann::ordered_json j;
    j["name"] = l.name();
    j["field"] = std::string(exactfield::to_string(l.field()));
    j["labels"] = l.labels();
    nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < l.dim(); ++a) {
        for (std::size_t b = a + 1; b < l.dim(); ++b) {
            const auto& terms = l.constants().get(a, b);
            if (terms.empty()) continue;
            nlohmann::ordered_json entry;
            entry["left"] = l.label(a);
            entry["right"] = l.label(b);
            nlohmann::ordered_json ts = nlohmann::ordered_json::array();
            for (const auto& t : terms) {
                nlohmann::ordered_json tj;
                tj["basis"] = l.label(t.basis);
                tj["coeff"] = t.coeff.to_string();
                ts.push_back(std::move(tj));
            }
            entry["terms"] = std::move(ts);
            brackets.push_back(std::move(entry));
        }
    }
    j["brackets"] = std::move(brackets);
    return j;
}

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [k, _] : j.items()) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end()) {
            throw ParseError(where + ": unknown key '" + k + "'");
        }
    }
    for (const char* k : keys) {
        if (!j.contains(k)) throw ParseError(where + ": missing key '" + std::string(k) + "'");
    }
}

const std::string& get_string(const nlohmann::json& j, const char* key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw ParseError(where + ": '" + std::string(key) + "' must be a string");
    return v.get_ref<const std::string&>();
}

}  // namespace

AlgebraData parse_algebra(const nlohmann::json& j) {
    require_keys(j, {"name", "field", "labels", "brackets"}, "algebra");
    const std::string name = get_string(j, "name", "algebra");
    const FieldTag field = exactfield::parse_field(get_string(j, "field", "algebra"));
    const auto& lj = j.at("labels");
    if (!lj.is_array()) throw ParseError("algebra: 'labels' must be an array");
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    for (const auto& x : lj) {
        if (!x.is_string()) throw ParseError("algebra: labels must be strings");
        labels.push_back(x.get<std::string>());
        if (!index.emplace(labels.back(), labels.size() - 1).second) {
            throw InvalidAlgebra("duplicate basis label '" + labels.back() + "'");
        }
    }
    auto lookup = [&](const std::string& s) {
        const auto it = index.find(s);
        if (it == index.end()) throw ParseError("unknown basis label '" + s + "'");
        return it->second;
    };

    // Each ordered pair at most once. A pair given in one order only gets
    // its antisymmetric partner implied; pairs given in both orders are kept
    // as written so that check_jacobi can report an inconsistency.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> given;
    const auto& bj = j.at("brackets");
    if (!bj.is_array()) throw ParseError("algebra: 'brackets' must be an array");
    for (const auto& b : bj) {
        require_keys(b, {"left", "right", "terms"}, "bracket");
        const std::size_t left = lookup(get_string(b, "left", "bracket"));
        const std::size_t right = lookup(get_string(b, "right", "bracket"));
        const auto& tj = b.at("terms");
        if (!tj.is_array()) throw ParseError("bracket: 'terms' must be an array");
        std::vector<Term> terms;
        std::set<std::size_t> bases;
        for (const auto& t : tj) {
            require_keys(t, {"basis", "coeff"}, "term");
            const std::size_t k = lookup(get_string(t, "basis", "term"));
            if (!bases.insert(k).second) throw ParseError("repeated basis '" + labels[k] + "' in one bracket");
            terms.push_back({k, exactfield::Scalar::parse(get_string(t, "coeff", "term"), field).value()});
        }
        if (!given.emplace(std::make_pair(left, right), std::move(terms)).second) {
            throw ParseError("bracket [" + labels[left] + ", " + labels[right] + "] given twice");
        }
    }
    StructureConstants c(labels.size(), field);
    for (const auto& [key, terms] : given) {
        const auto [left, right] = key;
        if (given.count({right, left}) || left == right) {
            c.set(left, right, terms);
        } else {
            c.set_antisymmetric(left, right, terms);
        }
    }
    return {name, std::move(labels), std::move(c)};
}

LieAlgebra from_json(const nlohmann::json& j) {
    AlgebraData a = parse_algebra(j);
    return LieAlgebra::create(std::move(a.name), std::move(a.labels), std::move(a.constants));
}

AlgebraData read_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_algebra(j);
}

LieAlgebra load(const std::string& path) {
    AlgebraData a = read_algebra(path);
    return LieAlgebra::create(std::move(a.name), std::move(a.labels), std::move(a.constants));
}

void save(const LieAlgebra& l, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << to_json(l).dump(2) << "\n";
    if (!out) throw ParseError("write failed for '" + path + "'");
}

}  // namespace lieloc::liealg
