#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mpla/deform_ext.hpp"
#include "mpla/json_io.hpp"
#include "mpla/matched_pair.hpp"
#include "mpla/mp_cohomology.hpp"
#include "mpla/mp_rep.hpp"
#include "mpla/skeletal.hpp"

using namespace mpla;
using io::json;

namespace {

struct Options {
    std::string format = "text";
    std::string output;
    std::string coefficients;
    int max_degree = 4;
    std::string as = "auto";
    std::vector<std::string> inputs;
};

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotACocycle:
    case ErrorKind::NotASection:
    case ErrorKind::NotRotaBaxter:
    case ErrorKind::NonzeroMiddleComponent:
    case ErrorKind::NotRestrictable:
    case ErrorKind::NotAComplex:
        return 1;
    default:
        return 2;
    }
}

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {}

    void emit(const std::string& text) const {
        if (o_.output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(o_.output);
        if (!out) fail(ErrorKind::ParseError, o_.output + ": cannot write");
        out << text;
    }
    void emit(const json& j) const { emit(j.dump(2) + "\n"); }

    int report(const ValidationReport& r) const {
        if (o_.format == "json")
            emit(io::report_json(r));
        else
            emit(r.to_text());
        return r.valid() ? 0 : 1;
    }

    const std::string& input(std::size_t i) const {
        if (i >= o_.inputs.size()) fail(ErrorKind::ParseError, "missing input file #" + std::to_string(i + 1));
        return o_.inputs[i];
    }
    json load(std::size_t i) const { return io::read_json(input(i)); }
    std::string tag(std::size_t i) const { return input(i) == "-" ? std::string("<stdin>") : input(i); }

    MatchedPair<Rational> pair(std::size_t i) const { return io::matched_pair(load(i), tag(i)); }

    std::optional<MPRepresentation<Rational>> coefficients(const MatchedPair<Rational>& base) const {
        if (o_.coefficients.empty()) return std::nullopt;
        return io::mp_representation(io::read_json(o_.coefficients), base, o_.coefficients);
    }
    MPRepresentation<Rational> coefficients_or_adjoint(const MatchedPair<Rational>& base) const {
        auto r = coefficients(base);
        return r ? *r : adjoint_representation(base);
    }

    int validate() const {
        auto j = load(0);
        std::string kind = o_.as;
        if (kind == "auto") {
            if (j.contains("G") && j.contains("H")) kind = "skeletal";
            else if (j.contains("dim0")) kind = "two-term";
            else if (j.contains("split")) kind = "extension";
            else if (j.contains("cobracket")) kind = "bialgebra";
            else if (j.contains("R")) kind = "rota-baxter";
            else if (j.contains("g") && j.contains("h")) kind = "mp";
            else if (j.contains("dim") && j.contains("bracket")) kind = "lie";
            else fail(ErrorKind::ParseError, tag(0) + ": cannot tell what kind of structure this is; use --as");
        }
        if (kind == "lie") return report(validate_lie_algebra(io::lie_algebra(j, tag(0))));
        if (kind == "mp" || kind == "matched-pair") {
            auto mp = io::matched_pair(j, tag(0));
            if (auto r = coefficients(mp)) {
                auto base = validate_matched_pair(mp);
                if (!base.valid()) return report(base);
                return report(validate_mp_representation(*r));
            }
            return report(validate_matched_pair(mp));
        }
        if (kind == "extension") {
            auto e = io::extension(j, tag(0));
            auto v = validate_matched_pair(e.total);
            v.append(validate_extension_shape(e));
            v.subject = "abelian extension";
            return report(v);
        }
        if (kind == "bialgebra") return report(validate_bialgebra(io::bialgebra(j, tag(0))));
        if (kind == "rota-baxter") {
            auto g = io::lie_algebra(io::field(j, "g", tag(0)), tag(0) + "/g");
            return report(check_rota_baxter(g, io::matrix(io::field(j, "R", tag(0)), g.dim(), g.dim(), tag(0) + "/R")));
        }
        if (kind == "two-term") return report(validate_two_term(io::two_term(j, tag(0))));
        if (kind == "skeletal") return report(validate_skeletal_matched_pair(io::skeletal_matched_pair(j, tag(0))));
        fail(ErrorKind::ParseError, "unknown --as value '" + kind + "'");
    }

    int bicross() const {
        emit(io::lie_algebra_json(bicrossed_product(pair(0))));
        return 0;
    }

    int semidirect() const {
        auto mp = pair(0);
        auto r = coefficients(mp);
        if (!r) fail(ErrorKind::ParseError, "semidirect needs --coefficients FILE");
        emit(io::matched_pair_json(semidirect_product(*r)));
        return 0;
    }

    int dual() const {
        auto mp = pair(0);
        require_valid(mp);
        emit(io::mp_representation_json(dual_representation(coefficients_or_adjoint(mp))));
        return 0;
    }

    int cohomology() const {
        auto mp = pair(0);
        require_valid(mp);
        if (o_.max_degree < 0) fail(ErrorKind::ParseError, "--max-degree must be non-negative");
        auto r = coefficients(mp);
        if (r) {
            auto v = validate_mp_representation(*r);
            if (!v.valid()) fail(ErrorKind::InvalidInput, "not a representation:\n" + v.to_text());
        }
        emit(io::dims_json(r ? mpl_cohomology_dims(*r, o_.max_degree) : mpl_cohomology_dims(mp, o_.max_degree)));
        return 0;
    }

    int mc_check() const {
        auto mp = pair(0);
        auto mc = mpla::mc_check(mp.structure_element());
        auto r = mc.report();
        bool axioms = validate_matched_pair(mp).valid();
        CheckResult agree{"agrees with the matched pair axioms", "", 1, 0, {}};
        if (axioms != mc.is_mc()) agree.record("verdicts", axioms ? "axioms hold, not Maurer-Cartan" : "axioms fail, Maurer-Cartan");
        r.checks.push_back(agree);
        return report(r);
    }

    int deform_check() const {
        auto mp = pair(0);
        auto d = io::deformation(load(1), mp.m(), mp.n(), tag(1));
        auto r = deformation_check(mp, d);
        const int code = r.is_deformation() ? 0 : 1;
        if (o_.format == "json") {
            emit(json{{"cocycle_route", r.cocycle_route},
                      {"ring_route", r.ring_route},
                      {"agree", r.agree()},
                      {"deformation", r.is_deformation()},
                      {"ring_report", io::report_json(r.ring_report)}});
        } else {
            std::string s = std::string("cocycle route: ") + (r.cocycle_route ? "CLOSED" : "NOT CLOSED") + "\n";
            s += std::string("ring route: ") + (r.ring_route ? "VALID" : "INVALID") + "\n";
            if (!r.agree()) s += "routes DISAGREE\n";
            s += r.ring_report.to_text();
            emit(s);
        }
        return r.agree() ? code : 1;
    }

    int deform_equiv() const {
        auto mp = pair(0);
        const int m = mp.m(), n = mp.n();
        auto d1 = io::deformation(load(1), m, n, tag(1));
        auto d2 = io::deformation(load(2), m, n, tag(2));
        auto maps = load(3);
        auto f = io::matrix(io::field(maps, "f", tag(3)), m, m, tag(3) + "/f");
        auto g = io::matrix(io::field(maps, "g", tag(3)), n, n, tag(3) + "/g");
        return report(deformation_equiv_check(mp, d1, d2, f, g));
    }

    int extend() const {
        auto mp = pair(0);
        auto r = coefficients_or_adjoint(mp);
        auto F = io::cochain(load(1), mp.m(), mp.n(), r.p, r.q, tag(1));
        emit(io::extension_json(cocycle_to_extension(r, F)));
        return 0;
    }

    int extract_cocycle() const {
        auto e = io::extension(load(0), tag(0));
        require_valid(e.total);
        auto shape = validate_extension_shape(e);
        if (!shape.valid()) fail(ErrorKind::InvalidInput, "not an abelian extension:\n" + shape.to_text());
        emit(io::cochain_json(extension_to_cocycle(e, Section::canonical(e.m, e.p, e.n, e.q))));
        return 0;
    }

    int skeletal_validate() const {
        return report(validate_skeletal_matched_pair(io::skeletal_matched_pair(load(0), tag(0))));
    }

    int skeletal_correspond() const {
        auto j = load(0);
        if (j.contains("G")) {
            emit(io::skeletal_triple_json(skeletal_to_triple(io::skeletal_matched_pair(j, tag(0)))));
            return 0;
        }
        auto t = io::skeletal_triple(j, tag(0));
        require_valid(t.mp);
        auto v = validate_mp_representation(t.rep);
        if (!v.valid()) fail(ErrorKind::InvalidInput, "not a representation:\n" + v.to_text());
        emit(io::skeletal_matched_pair_json(triple_to_skeletal(t)));
        return 0;
    }

    int rota_baxter() const {
        auto j = load(0);
        auto g = io::lie_algebra(io::field(j, "g", tag(0)), tag(0) + "/g");
        auto R = io::matrix(io::field(j, "R", tag(0)), g.dim(), g.dim(), tag(0) + "/R");
        auto chk = check_rota_baxter(g, R);
        if (!chk.valid()) return report(chk);
        auto s = rota_baxter_matched_pair(g, R);
        emit(json{{"matched_pair", io::matched_pair_json(s.pair)},
                  {"basis", io::matrix_json(s.basis)},
                  {"rank", rank(s.basis)}});
        return 0;
    }

    int bialgebra() const {
        auto b = io::bialgebra(load(0), tag(0));
        auto v = validate_bialgebra(b);
        if (!v.valid()) return report(v);
        emit(io::matched_pair_json(bialgebra_to_matched_pair(b)));
        return 0;
    }

private:
    const Options& o_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with matched pairs of Lie algebras"};
    app.require_subcommand(1, 1);
    Options o;

    struct Verb {
        const char* name;
        const char* help;
        int (Runner::*fn)() const;
        const char* inputs;
    };
    const Verb verbs[] = {
        {"validate", "check the axioms of a structure", &Runner::validate, "FILE"},
        {"bicross", "bicrossed product of a matched pair", &Runner::bicross, "PAIR"},
        {"semidirect", "semidirect product with --coefficients", &Runner::semidirect, "PAIR"},
        {"dual", "dual representation (coadjoint without --coefficients)", &Runner::dual, "PAIR"},
        {"cohomology", "dimensions of the matched pair cohomology", &Runner::cohomology, "PAIR"},
        {"mc-check", "Maurer-Cartan check of the structure element", &Runner::mc_check, "PAIR"},
        {"deform-check", "is a candidate an infinitesimal deformation", &Runner::deform_check, "PAIR DEFORMATION"},
        {"deform-equiv", "equivalence of two deformations via (f,g)", &Runner::deform_equiv, "PAIR D1 D2 MAPS"},
        {"extend", "abelian extension of a 2-cocycle", &Runner::extend, "PAIR COCYCLE"},
        {"extract-cocycle", "2-cocycle of an extension, canonical section", &Runner::extract_cocycle, "EXTENSION"},
        {"skeletal-validate", "check a matched pair of skeletal algebras", &Runner::skeletal_validate, "FILE"},
        {"skeletal-correspond", "skeletal data <-> (pair, representation, 3-cocycle)", &Runner::skeletal_correspond, "FILE"},
        {"rota-baxter", "matched pair of a Rota-Baxter operator of weight 1", &Runner::rota_baxter, "FILE"},
        {"bialgebra", "matched pair (g, g*) of a Lie bialgebra", &Runner::bialgebra, "FILE"},
    };
    std::vector<std::pair<CLI::App*, const Verb*>> subs;
    for (const auto& v : verbs) {
        auto* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("inputs", o.inputs, std::string("input files (") + v.inputs + "), '-' for stdin")->required();
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", o.output, "write the result to FILE");
        sub->add_option("--coefficients", o.coefficients, "matched pair representation FILE");
        sub->add_option("--max-degree", o.max_degree, "highest cohomological degree")->capture_default_str();
        if (std::string(v.name) == "validate")
            sub->add_option("--as", o.as, "lie, mp, extension, bialgebra, rota-baxter, two-term, skeletal or auto");
        subs.emplace_back(sub, &v);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    Runner runner(o);
    for (const auto& [sub, v] : subs) {
        if (!sub->parsed()) continue;
        try {
            return (runner.*(v->fn))();
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            return exit_code(e.kind());
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
