#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bridge.hpp"
#include "lieloc/dersolve.hpp"
#include "lieloc/liealg.hpp"

using namespace lieloc;
using namespace lieloc::liealg;
using exactfield::BigInt;
using exactfield::GaussianRational;
using exactfield::Rational;

namespace {

Element el(const LieAlgebra& l, const std::string& label) { return Element::basis(l, label); }

Element random_element(oracle::Gen& g, const LieAlgebra& l) {
    return {l, bridge::vector(g, l.dim(), l.field(), 30)};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lieloc_test_" + name)).string();
}

// Oracle tensor agrees with the library's structure constants.
template <class T>
bool same_constants(const LieAlgebra& l, const oracle::Tensor<T>& t) {
    for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = 0; j < l.dim(); ++j) {
            const auto v = l.constants().bracket_vector(i, j);
            for (std::size_t k = 0; k < l.dim(); ++k) {
                if (!(bridge::to_cq(v[k]) == oracle::CQ(t.at(i, j, k)))) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("Schrodinger brackets") {
    const auto s = make_schrodinger(3);
    CHECK(s.dim() == 10);
    CHECK(s.labels() == std::vector<std::string>{"e", "h", "f", "z", "u_1", "u_2", "u_3", "v_1", "v_2", "v_3"});
    CHECK(bracket(el(s, "h"), el(s, "e")) == exactfield::Scalar::rational(2) * el(s, "e"));
    CHECK(bracket(el(s, "e"), el(s, "v_2")) == el(s, "u_2"));
    CHECK(bracket(el(s, "u_2"), el(s, "v_2")) == el(s, "z"));
    CHECK(bracket(el(s, "u_1"), el(s, "v_2")).is_zero());
    for (std::size_t b = 0; b < s.dim(); ++b) CHECK(bracket(el(s, "z"), Element::basis(s, b)).is_zero());
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(make_schrodinger(n).dim() == 2 * n + 4);
        CHECK(same_constants(make_schrodinger(n), oracle::schrodinger<mpq_class>(n)));
    }
    CHECK_THROWS_AS(make_schrodinger(0), InvalidArgument);
}

TEST_CASE("Heisenberg and sl2") {
    const auto h = make_heisenberg(1);
    CHECK(h.dim() == 3);
    CHECK(bracket(el(h, "u_1"), el(h, "v_1")) == el(h, "z"));
    for (std::size_t n = 1; n <= 4; ++n) CHECK(same_constants(make_heisenberg(n), oracle::heisenberg<mpq_class>(n)));
    // two-step nilpotent
    const auto h3 = make_heisenberg(3);
    for (std::size_t a = 0; a < h3.dim(); ++a) {
        for (std::size_t b = 0; b < h3.dim(); ++b) {
            const auto ab = bracket(Element::basis(h3, a), Element::basis(h3, b));
            for (std::size_t c = 0; c < h3.dim(); ++c) CHECK(bracket(Element::basis(h3, c), ab).is_zero());
        }
    }
    CHECK_THROWS_AS(make_heisenberg(0), InvalidArgument);
    const auto sl = make_sl2();
    CHECK(bracket(el(sl, "e"), el(sl, "f")) == el(sl, "h"));
    CHECK(same_constants(sl, oracle::sl2<mpq_class>()));
    CHECK(check_jacobi(sl.constants()).ok());
}

TEST_CASE("center") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto c = center(make_schrodinger(n));
        CHECK(c.dim() == 1);
        CHECK(c.contains(el(make_schrodinger(n), "z").coords()));
    }
    CHECK(center(make_heisenberg(1)).dim() == 1);
    CHECK(center(make_sl2()).dim() == 0);
    CHECK(center(make_abelian(4)).dim() == 4);
}

TEST_CASE("ad(h) grades the Schrodinger algebra") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto s = make_schrodinger(n);
        const auto m = ad(el(s, "h"));
        for (std::size_t a = 0; a < s.dim(); ++a) {
            for (std::size_t b = 0; b < s.dim(); ++b) {
                if (a != b) CHECK(m(a, b).is_zero());
            }
        }
        CHECK(m(0, 0) == 2);
        CHECK(m(1, 1) == 0);
        CHECK(m(2, 2) == -2);
        CHECK(m(3, 3) == 0);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(m(4 + k, 4 + k) == 1);
            CHECK(m(4 + n + k, 4 + n + k) == -1);
        }
        CHECK(ad(el(s, "z")).matrix().is_zero());
    }
}

TEST_CASE("Jacobi and antisymmetry on random elements of generated algebras") {
    oracle::Gen g(301);
    const std::vector<LieAlgebra> algebras = {make_schrodinger(1), make_schrodinger(2, FieldTag::Qi),
                                              make_schrodinger(3), make_heisenberg(2), make_sl2(FieldTag::Qi)};
    for (int t = 0; t < 150; ++t) {
        const auto& l = algebras[static_cast<std::size_t>(t) % algebras.size()];
        const auto x = random_element(g, l), y = random_element(g, l), w = random_element(g, l);
        CHECK(bracket(x, y) == exactfield::Scalar(l.field(), -1) * bracket(y, x));
        CHECK(bracket(x, x).is_zero());
        CHECK((bracket(x, bracket(y, w)) + bracket(y, bracket(w, x)) + bracket(w, bracket(x, y))).is_zero());
        // bilinearity
        const exactfield::Scalar a(l.field(), bridge::scalar(g, l.field()));
        CHECK(bracket(a * x + y, w) == a * bracket(x, w) + bracket(y, w));
        // the oracle bracket agrees
        const auto tensor = oracle::schrodinger<oracle::CQ>(1);
        if (l.name() == "S_1") {
            CHECK(bridge::to_cq(bracket(x, y).coords()) == tensor.bracket(bridge::to_cq(x.coords()), bridge::to_cq(y.coords())));
        }
        // ad(x) is a derivation
        CHECK(dersolve::is_derivation(l, ad(x)).ok);
    }
}

TEST_CASE("check_jacobi reports planted defects") {
    CHECK(check_jacobi(make_schrodinger(2).constants()).ok());
    CHECK(check_jacobi(make_abelian(3).constants()).ok());

    auto c = make_sl2().constants();
    c.set(0, 1, {{0, 2}});  // [e,h] = +2e alongside [h,e] = 2e
    const auto v = check_jacobi(c);
    CHECK(v.failure == JacobiVerdict::Failure::Antisymmetry);
    CHECK(v.i == 0);
    CHECK(v.j == 1);
    CHECK_THROWS_AS(LieAlgebra::create("bad", {"e", "h", "f"}, c), InvalidAlgebra);

    // antisymmetric but not Lie: [a,b]=a, [b,c]=b, [c,a]=0 fails on (a,b,c)
    StructureConstants d(3, FieldTag::Q);
    d.set_antisymmetric(0, 1, {{0, 1}});
    d.set_antisymmetric(1, 2, {{1, 1}});
    const auto j = check_jacobi(d);
    CHECK(j.failure == JacobiVerdict::Failure::Jacobi);
    CHECK(j.describe({"a", "b", "c"}).find("(a, b, c)") != std::string::npos);
}

TEST_CASE("restriction recovers sl2 and the Heisenberg ideal") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto s = make_schrodinger(n);
        const auto sl = s.restrict({0, 1, 2}, "sl_2");
        CHECK(sl == make_sl2());
        std::vector<std::size_t> idx = {3};
        for (std::size_t k = 0; k < 2 * n; ++k) idx.push_back(4 + k);
        CHECK(s.restrict(idx, "h_" + std::to_string(n)) == make_heisenberg(n));
        CHECK_THROWS_AS(s.restrict({0, 2}, "x"), InvalidArgument);
    }
}

TEST_CASE("element formatting") {
    const auto s = make_schrodinger(2, FieldTag::Qi);
    const auto x = el(s, "f") + exactfield::Scalar(FieldTag::Qi, Rational(BigInt(-1), BigInt(2))) * el(s, "z") -
                   el(s, "v_1");
    CHECK(x.to_string() == "f-1/2*z-v_1");
    const auto y = el(s, "u_1") + exactfield::Scalar(FieldTag::Qi, GaussianRational::i()) * el(s, "u_2");
    CHECK(y.to_string() == "u_1+i*u_2");
    CHECK(Element::zero(s).to_string() == "0");
    CHECK(format_combination({{"a", GaussianRational(1, 2)}, {"b", -1}}) == "(1+2*i)*a-b");
}

TEST_CASE("save and load round-trip exactly") {
    std::vector<LieAlgebra> algebras;
    for (std::size_t n = 1; n <= 6; ++n) algebras.push_back(make_schrodinger(n));
    for (std::size_t n = 1; n <= 4; ++n) algebras.push_back(make_heisenberg(n));
    algebras.push_back(make_sl2());
    algebras.push_back(make_schrodinger(2, FieldTag::Qi));
    const auto path = temp_path("roundtrip.json");
    for (const auto& l : algebras) {
        save(l, path);
        const auto back = load(path);
        CHECK(back == l);
        CHECK(back.constants() == l.constants());
        CHECK(back.field() == l.field());
        // saving again gives the same bytes
        std::ifstream a(path);
        const std::string first((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
        save(back, path);
        std::ifstream b(path);
        const std::string second((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
        CHECK(first == second);
    }
    std::remove(path.c_str());
}

TEST_CASE("algebra files: implied partners and rejections") {
    const auto base = R"({"name":"sl_2","field":"Q","labels":["e","h","f"],"brackets":[
        {"left":"h","right":"e","terms":[{"basis":"e","coeff":"2"}]},
        {"left":"h","right":"f","terms":[{"basis":"f","coeff":"-2"}]},
        {"left":"e","right":"f","terms":[{"basis":"h","coeff":"1"}]}]})";
    const auto l = from_json(nlohmann::json::parse(base));
    CHECK(l == make_sl2());

    auto j = nlohmann::json::parse(base);
    j["extra"] = 1;
    CHECK_THROWS_AS(from_json(j), ParseError);

    j = nlohmann::json::parse(base);
    j["labels"] = {"e", "e", "f"};
    CHECK_THROWS_AS(from_json(j), InvalidAlgebra);

    j = nlohmann::json::parse(base);
    j["brackets"][1]["terms"][0]["basis"] = "e";  // [h,f] = -2e breaks Jacobi
    CHECK_THROWS_AS(from_json(j), InvalidAlgebra);

    j = nlohmann::json::parse(base);
    j["brackets"][0]["terms"][0]["basis"] = "q";
    CHECK_THROWS_AS(from_json(j), ParseError);

    j = nlohmann::json::parse(base);
    j["field"] = "R";
    CHECK_THROWS_AS(from_json(j), ParseError);

    j = nlohmann::json::parse(base);
    j["brackets"][0]["terms"][0]["coeff"] = "i";
    CHECK_THROWS(from_json(j));

    CHECK_THROWS_AS(load("/nonexistent/lieloc.json"), ParseError);
}
