#include "lieloc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "lieloc/certify.hpp"
#include "lieloc/report.hpp"

namespace lieloc::cli {

using exactfield::FieldTag;
using liealg::LieAlgebra;
using report::Json;

namespace {

// Where a command gets its algebra from: a file, or one of the generators.
struct Source {
    std::string path;
    std::size_t schrodinger = 0;
    std::size_t heisenberg = 0;
    std::size_t abelian = 0;
    bool sl2 = false;
    std::string field;

    void attach(CLI::App* cmd, bool with_path) {
        if (with_path) cmd->add_option("algebra", path, "Algebra file (JSON)")->check(CLI::ExistingFile);
        cmd->add_option("--n,--schrodinger", schrodinger, "Schrodinger algebra of rank n")->check(CLI::PositiveNumber);
        cmd->add_option("--heisenberg", heisenberg, "Heisenberg algebra of rank n")->check(CLI::PositiveNumber);
        cmd->add_option("--abelian", abelian, "Abelian algebra of dimension k")->check(CLI::PositiveNumber);
        cmd->add_flag("--sl2", sl2, "The 3-dimensional simple algebra");
        cmd->add_option("--field", field, "Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
    }

    FieldTag field_or(FieldTag fallback) const { return field.empty() ? fallback : exactfield::parse_field(field); }

    // The algebra and its rank n (0 when not a generated family member).
    std::pair<LieAlgebra, std::size_t> resolve(FieldTag default_field) const {
        const int chosen = (!path.empty()) + (schrodinger > 0) + (heisenberg > 0) + (abelian > 0) + (sl2 ? 1 : 0);
        if (chosen != 1) {
            throw InvalidArgument("choose exactly one algebra: a file, --n, --heisenberg, --abelian or --sl2");
        }
        const FieldTag f = field_or(default_field);
        if (schrodinger > 0) return {liealg::make_schrodinger(schrodinger, f), schrodinger};
        if (heisenberg > 0) return {liealg::make_heisenberg(heisenberg, f), heisenberg};
        if (abelian > 0) return {liealg::make_abelian(abelian, f), 0};
        if (sl2) return {liealg::make_sl2(f), 0};
        LieAlgebra l = liealg::load(path);
        if (!field.empty() && f != l.field()) {
            if (f == FieldTag::Qi) {
                l = l.embed();
            } else {
                throw InvalidArgument("cannot restrict a Qi algebra to Q");
            }
        }
        std::size_t n = liealg::schrodinger_rank(l).value_or(0);
        if (n == 0 && l.dim() % 2 == 1 && l.dim() >= 3) {
            const std::size_t k = (l.dim() - 1) / 2;
            const LieAlgebra h = liealg::make_heisenberg(k, l.field());
            if (h.labels() == l.labels() && h.constants() == l.constants()) n = k;
        }
        return {l, n};
    }
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int exit_for(bool ok) { return ok ? kOk : kVerificationFailed; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact derivation and local-derivation analysis of Lie algebras given by structure constants",
                 "lieloc"};
    app.require_subcommand(1, 1);

    // gen
    Source gen_src;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write a generated algebra as JSON");
    gen->add_option("--schrodinger", gen_src.schrodinger, "Schrodinger algebra of rank n")->check(CLI::PositiveNumber);
    gen->add_option("--heisenberg", gen_src.heisenberg, "Heisenberg algebra of rank n")->check(CLI::PositiveNumber);
    gen->add_option("--abelian", gen_src.abelian, "Abelian algebra of dimension k")->check(CLI::PositiveNumber);
    gen->add_flag("--sl2", gen_src.sl2, "The 3-dimensional simple algebra");
    gen->add_option("--field", gen_src.field, "Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
    gen->add_option("-o,--output", gen_out, "Output path (default: standard output)");

    // jacobi
    std::string jacobi_path;
    auto* jacobi = app.add_subcommand("jacobi", "Check antisymmetry and the Jacobi identity of an algebra file");
    jacobi->add_option("algebra", jacobi_path, "Algebra file (JSON)")->required()->check(CLI::ExistingFile);

    // der
    Source der_src;
    auto* der = app.add_subcommand("der", "Derivation algebra: dimensions and a basis");
    der_src.attach(der, true);

    // outer-check
    Source outer_src;
    auto* outer = app.add_subcommand("outer-check", "Check Der = Inn + span{sigma_lk} + span{tau} on a Schrodinger algebra");
    outer_src.attach(outer, true);

    // locder-basis
    Source basis_src;
    auto* lbasis = app.add_subcommand("locder-basis", "Candidate space from the basis elements alone");
    basis_src.attach(lbasis, true);

    // locder-replay
    std::size_t replay_n = 0;
    std::string replay_field;
    bool as_printed = false;
    auto* replay = app.add_subcommand("locder-replay", "Fold the fixed probe schedule on the Schrodinger algebra");
    replay->add_option("--n", replay_n, "Rank n")->required()->check(CLI::PositiveNumber);
    replay->add_option("--field", replay_field, "Q or Qi (default Qi)")->check(CLI::IsMember({"Q", "Qi"}));
    replay->add_flag("--as-printed", as_printed, "Use the literal probe elements (f+1/2*z-v_j, no u_j+v_j probes)");

    // locder-random
    Source rand_src;
    locder::RandomOptions rand_opts;
    auto* lrandom = app.add_subcommand("locder-random", "Basis constraints plus seeded random probes until stable");
    rand_src.attach(lrandom, true);
    lrandom->add_option("--seed", rand_opts.seed, "Random seed")->capture_default_str();
    lrandom->add_option("--max-probes", rand_opts.max_probes, "Maximum random probes")->capture_default_str();
    lrandom->add_option("--stall", rand_opts.stall_limit, "Stop after this many probes without progress")
        ->capture_default_str();

    // certify
    std::string cert_algebra, cert_map;
    std::uint64_t cert_seed = locder::kDefaultSeed;
    auto* cert = app.add_subcommand("certify", "Decide whether a linear map is a local derivation");
    cert->add_option("algebra", cert_algebra, "Algebra file (JSON)")->required()->check(CLI::ExistingFile);
    cert->add_option("map", cert_map, "Map file (JSON)")->required()->check(CLI::ExistingFile);
    cert->add_option("--seed", cert_seed, "Seed for evaluation points")->capture_default_str();

    // demo-heisenberg
    std::uint64_t demo_seed = locder::kDefaultSeed;
    auto* demo = app.add_subcommand("demo-heisenberg", "A local derivation of h_1 that is not a derivation");
    demo->add_option("--seed", demo_seed, "Random seed")->capture_default_str();

    // decompose
    std::vector<std::string> dec_files;
    std::size_t dec_n = 0;
    auto* dec = app.add_subcommand("decompose", "Split a derivation of S_n into inner, sigma and tau parts");
    dec->add_option("files", dec_files, "[algebra] map")->required()->expected(1, 2);
    dec->add_option("--n", dec_n, "Use the generated S_n instead of an algebra file")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    try {
        if (gen->parsed()) {
            const LieAlgebra l = gen_src.resolve(FieldTag::Q).first;
            if (gen_out.empty()) {
                out << liealg::to_json(l).dump(2) << "\n";
            } else {
                liealg::save(l, gen_out);
            }
            return kOk;
        }
        if (jacobi->parsed()) {
            const liealg::AlgebraData a = liealg::read_algebra(jacobi_path);
            const auto v = liealg::check_jacobi(a.constants);
            Json j;
            j["algebra"] = a.name;
            j["dim"] = a.labels.size();
            j["ok"] = v.ok();
            if (!v.ok()) {
                j["failure"] = v.failure == liealg::JacobiVerdict::Failure::Antisymmetry ? "antisymmetry" : "jacobi";
                Json where = Json::array({a.labels[v.i], a.labels[v.j]});
                if (v.failure == liealg::JacobiVerdict::Failure::Jacobi) where.push_back(a.labels[v.k]);
                j["at"] = std::move(where);
                err << v.describe(a.labels) << "\n";
            }
            emit(out, j);
            return exit_for(v.ok());
        }
        if (der->parsed()) {
            emit(out, report::derivation_report(dersolve::derivation_space(der_src.resolve(FieldTag::Q).first)));
            return kOk;
        }
        if (outer->parsed()) {
            const LieAlgebra l = outer_src.resolve(FieldTag::Q).first;
            const auto r = dersolve::outer_structure(l);
            emit(out, report::outer_report(l, r));
            return exit_for(r.ok());
        }
        if (lbasis->parsed()) {
            const auto [l, n] = basis_src.resolve(FieldTag::Q);
            const auto c = locder::basis_probe_space(dersolve::derivation_space(l));
            emit(out, report::locder_report(locder::summarize(c, n, std::nullopt)));
            return kOk;
        }
        if (replay->parsed()) {
            const FieldTag f = replay_field.empty() ? FieldTag::Qi : exactfield::parse_field(replay_field);
            const auto r = locder::replay_proof(replay_n, as_printed ? locder::Schedule::AsPrinted : locder::Schedule::Repaired, f);
            emit(out, report::locder_report(r.result));
            return exit_for(r.result.equal);
        }
        if (lrandom->parsed()) {
            const auto [l, n] = rand_src.resolve(FieldTag::Q);
            const auto c = locder::random_probe_closure(dersolve::derivation_space(l), rand_opts);
            const auto r = locder::summarize(c, n, rand_opts.seed);
            emit(out, report::locder_report(r));
            return exit_for(r.equal);
        }
        if (cert->parsed()) {
            const LieAlgebra l = liealg::load(cert_algebra);
            const auto m = report::load_map(l, cert_map);
            certify::CertifyOptions opts;
            opts.seed = cert_seed;
            const auto c = certify::certify_local_symbolic(dersolve::derivation_space(l), m, opts);
            Json j = report::certificate_report(l, c);
            const auto v = dersolve::is_derivation(l, m);
            j["is_derivation"] = v.ok;
            emit(out, j);
            return exit_for(c.verdict == certify::Verdict::Local);
        }
        if (demo->parsed()) {
            const LieAlgebra h = liealg::make_heisenberg(1);
            const auto d = dersolve::derivation_space(h);
            linalg::LinearMap delta(h.dim(), h.field());
            delta.set(h.index_of("z"), h.index_of("z"), 1);
            const auto v = dersolve::is_derivation(h, delta);
            certify::CertifyOptions opts;
            opts.seed = demo_seed;
            const auto c = certify::certify_local_symbolic(d, delta, opts);
            locder::RandomOptions ro;
            ro.seed = demo_seed;
            const auto closure = locder::random_probe_closure(d, ro);
            const bool local = c.verdict == certify::Verdict::Local;
            Json j;
            j["algebra"] = h.name();
            j["der_dim"] = d.dim();
            j["map"] = report::map_to_json(h, delta);
            j["is_derivation"] = v.ok;
            j["failing_pair"] = v.ok ? Json(nullptr) : Json::array({h.label(v.i), h.label(v.j)});
            j["certify_local"] = local;
            j["certificate"] = report::certificate_report(h, c);
            j["random_closure"] = report::locder_report(locder::summarize(closure, 1, ro.seed));
            j["pure_local_derivation"] = local && !v.ok;
            emit(out, j);
            return exit_for(local && !v.ok);
        }
        if (dec->parsed()) {
            LieAlgebra l = liealg::make_sl2();
            std::string map_path;
            if (dec_files.size() == 2) {
                if (dec_n > 0) throw InvalidArgument("give either an algebra file or --n, not both");
                l = liealg::load(dec_files[0]);
                map_path = dec_files[1];
            } else {
                if (dec_n == 0) throw InvalidArgument("decompose needs an algebra file or --n");
                l = liealg::make_schrodinger(dec_n);
                map_path = dec_files[0];
            }
            const auto m = report::load_map(l, map_path);
            const auto d = dersolve::decompose(l, m);
            emit(out, report::decomposition_report(l, d, dersolve::reassemble(l, d) == m));
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace lieloc::cli
