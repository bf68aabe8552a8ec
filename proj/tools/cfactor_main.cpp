// Command-line front end: exact tensor products of recurrence operators
// and the inverse factorization problem.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cfactor/cfactor.hpp>

namespace {

using cfactor::dense_poly;
using cfactor::factored_poly;
using cfactor::rational;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_no_result = 1;
constexpr int exit_input_error = 2;
constexpr int exit_internal_error = 3;

struct operand_options {
    std::vector<std::string> coeffs;
    std::vector<std::string> roots;
    std::vector<std::string> mults;
};

void add_operand_flags(CLI::App* cmd, operand_options& op, int max_operands) {
    cmd->add_option("--coeffs", op.coeffs,
                    "polynomial as ascending coefficients \"c0,c1,...,cd\"")
        ->expected(0, max_operands);
    cmd->add_option("--roots", op.roots, "polynomial as roots \"r1,r2,...\"")
        ->expected(0, max_operands);
    cmd->add_option("--mults", op.mults,
                    "multiplicities \"m1,m2,...\" paired with --roots")
        ->expected(0, max_operands);
}

factored_poly parse_factored_operand(const std::string& roots, const std::string* mults) {
    const auto rs = cfactor::io::parse_scalar_list(roots);
    if (mults) return factored_poly::from_roots(rs, cfactor::io::parse_int_list(*mults));
    return factored_poly::from_roots(rs);
}

/// All operands of a command in factored form; --coeffs inputs go
/// through rational root extraction.
std::vector<factored_poly> factored_operands(const operand_options& op) {
    std::vector<factored_poly> out;
    for (const auto& c : op.coeffs)
        out.push_back(cfactor::rational_roots(cfactor::io::parse_poly(c)));
    for (std::size_t i = 0; i < op.roots.size(); ++i)
        out.push_back(parse_factored_operand(
            op.roots[i], i < op.mults.size() ? &op.mults[i] : nullptr));
    return out;
}

std::vector<dense_poly> dense_operands(const operand_options& op) {
    std::vector<dense_poly> out;
    for (const auto& c : op.coeffs) out.push_back(cfactor::io::parse_poly(c));
    for (std::size_t i = 0; i < op.roots.size(); ++i)
        out.push_back(cfactor::expand(parse_factored_operand(
            op.roots[i], i < op.mults.size() ? &op.mults[i] : nullptr)));
    return out;
}

std::vector<rational> read_terms(const std::string& path) {
    if (path == "-") return cfactor::io::parse_terms(std::cin);
    std::ifstream in(path);
    if (!in) throw cfactor::invalid_input_error("cannot open terms file '" + path + "'");
    return cfactor::io::parse_terms(in);
}

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json) std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

json factorization_json(const factored_poly& p, const factored_poly& q) {
    return json{{"p", cfactor::io::to_json(p)}, {"q", cfactor::io::to_json(q)}};
}

int run_tensor(const operand_options& op, bool as_json) {
    const auto fs = factored_operands(op);
    if (fs.size() != 2) throw cfactor::invalid_input_error("tensor needs exactly two operands");
    const factored_poly r = cfactor::tensor_factored(fs[0], fs[1]);
    emit(cfactor::io::to_json(r), r.str(), as_json);
    return exit_ok;
}

int run_mul(const operand_options& op, bool as_json) {
    const auto ps = dense_operands(op);
    if (ps.size() != 2) throw cfactor::invalid_input_error("mul needs exactly two operands");
    const dense_poly r = cfactor::mul_coeff(ps[0], ps[1]);
    emit(cfactor::io::to_json(r), cfactor::io::poly_to_text(r), as_json);
    return exit_ok;
}

int run_testfact(const operand_options& op, bool as_json) {
    const auto ps = dense_operands(op);
    if (ps.size() != 1) throw cfactor::invalid_input_error("testfact needs exactly one operand");
    const auto res = cfactor::test_fact(ps[0]);
    const bool possibly = res.verdict == cfactor::factorability::possibly_factorable;
    json prof = json::array();
    for (const auto& [mult, count] : res.profile.pairs)
        prof.push_back(json{{"mult", mult}, {"count", count}});
    emit(json{{"verdict", possibly ? "PossiblyFactorable" : "NotFactorable"},
              {"profile", std::move(prof)}},
         std::string(possibly ? "PossiblyFactorable" : "NotFactorable") + "  profile " +
             res.profile.str(),
         as_json);
    return possibly ? exit_ok : exit_no_result;
}

int run_factor(const operand_options& op, const std::string& terms_path, bool as_json,
               bool cross_check) {
    factored_poly r;
    if (!terms_path.empty()) {
        r = cfactor::rational_roots(cfactor::guess_recurrence(read_terms(terms_path)));
    } else {
        const auto fs = factored_operands(op);
        if (fs.size() != 1) throw cfactor::invalid_input_error("factor needs exactly one operand");
        r = fs[0];
    }
    const auto decs = cfactor::factor(r);
    if (cross_check) {
        const cfactor::root_list roots(r.support().roots());
        if (cfactor::search_grids(roots) != cfactor::oracle::brute_force_all_grids(roots)) {
            std::cerr << "oracle cross-check failed: search and enumeration disagree\n";
            return exit_internal_error;
        }
    }
    if (decs.empty()) {
        emit(json{{"factorizations", json::array()}}, "no factorization", as_json);
        return exit_no_result;
    }
    json arr = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < decs.size(); ++i) {
        arr.push_back(factorization_json(decs[i].p, decs[i].q));
        if (i) text << "\n";
        text << decs[i].p.str() << "  (x)  " << decs[i].q.str();
    }
    emit(json{{"factorizations", std::move(arr)}}, text.str(), as_json);
    return exit_ok;
}

int run_lincomb(const operand_options& op, bool as_json, bool cross_check) {
    const auto fs = factored_operands(op);
    if (fs.size() != 1) throw cfactor::invalid_input_error("lincomb needs exactly one operand");
    const auto decs = cfactor::lincomb_decompose(fs[0]);
    if (cross_check) {
        const cfactor::root_list roots(fs[0].support().roots());
        if (cfactor::search_grid_pairs(roots) != cfactor::oracle::brute_force_grid_pairs(roots)) {
            std::cerr << "oracle cross-check failed: pair search and enumeration disagree\n";
            return exit_internal_error;
        }
    }
    if (decs.empty()) {
        emit(json{{"decompositions", json::array()}}, "no decomposition", as_json);
        return exit_no_result;
    }
    json arr = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < decs.size(); ++i) {
        const auto& d = decs[i];
        arr.push_back(json{{"p1", cfactor::io::to_json(d.p1)},
                           {"q1", cfactor::io::to_json(d.q1)},
                           {"p2", cfactor::io::to_json(d.p2)},
                           {"q2", cfactor::io::to_json(d.q2)},
                           {"degenerate", d.degenerate}});
        if (i) text << "\n";
        text << "lcm[ " << d.p1.str() << " (x) " << d.q1.str() << " , " << d.p2.str() << " (x) "
             << d.q2.str() << " ]" << (d.degenerate ? "  [degenerate]" : "");
    }
    emit(json{{"decompositions", std::move(arr)}}, text.str(), as_json);
    return exit_ok;
}

int run_guess(const std::string& terms_path, bool as_json) {
    const dense_poly p = cfactor::guess_recurrence(read_terms(terms_path));
    emit(cfactor::io::to_json(p), cfactor::io::poly_to_text(p), as_json);
    return exit_ok;
}

int run_unroll(const operand_options& op, const std::string& init, int count, bool as_json) {
    const auto ps = dense_operands(op);
    if (ps.size() != 1) throw cfactor::invalid_input_error("unroll needs exactly one operand");
    const cfactor::cfinite_seq seq(ps[0], cfactor::io::parse_scalar_list(init));
    const auto terms = cfactor::unroll(seq, count);
    json arr = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        arr.push_back(terms[i].str());
        if (i) text << ',';
        text << terms[i].str();
    }
    emit(json{{"terms", std::move(arr)}}, text.str(), as_json);
    return exit_ok;
}

int run_verify(const operand_options& op, const std::string& fact_path, bool as_json,
               int trials, int length, std::uint64_t seed) {
    const auto rs = dense_operands(op);
    if (rs.size() != 1) throw cfactor::invalid_input_error("verify needs exactly one target");
    const dense_poly target = cfactor::monic(rs[0]);

    std::string content;
    if (fact_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        content = buf.str();
    } else {
        std::ifstream in(fact_path);
        if (!in) throw cfactor::invalid_input_error("cannot open '" + fact_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        content = buf.str();
    }
    json j = json::parse(content, nullptr, false);
    if (j.is_discarded()) throw cfactor::invalid_input_error("claim file is not valid JSON");
    // Accept a single claim object or a whole factor/lincomb output.
    if (j.contains("factorizations")) {
        if (j["factorizations"].empty())
            throw cfactor::invalid_input_error("claim holds no factorizations");
        j = j["factorizations"][0];
    } else if (j.contains("decompositions")) {
        if (j["decompositions"].empty())
            throw cfactor::invalid_input_error("claim holds no decompositions");
        j = j["decompositions"][0];
    }
    bool ok = false;
    if (j.contains("p1")) {
        const factored_poly p1 = cfactor::io::factored_from_json(j.at("p1"));
        const factored_poly q1 = cfactor::io::factored_from_json(j.at("q1"));
        const factored_poly p2 = cfactor::io::factored_from_json(j.at("p2"));
        const factored_poly q2 = cfactor::io::factored_from_json(j.at("q2"));
        const dense_poly prod1 = cfactor::expand(cfactor::tensor_factored(p1, q1));
        const dense_poly prod2 = cfactor::expand(cfactor::tensor_factored(p2, q2));
        ok = cfactor::lcm(prod1, prod2) == target;
    } else {
        const factored_poly p = cfactor::io::factored_from_json(j.at("p"));
        const factored_poly q = cfactor::io::factored_from_json(j.at("q"));
        ok = cfactor::expand(cfactor::tensor_factored(p, q)) == target;
        if (ok && trials > 0) {
            ok = cfactor::verify_product_closure(cfactor::expand(p), cfactor::expand(q), trials,
                                                 length, seed);
        }
    }
    emit(json{{"ok", ok}}, ok ? "ok" : "mismatch", as_json);
    return ok ? exit_ok : exit_no_result;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tensor products of C-finite recurrence operators and their factorization"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    operand_options tensor_op, mul_op, testfact_op, factor_op, lincomb_op, unroll_op, verify_op;
    std::string factor_terms, guess_terms, unroll_init, verify_fact;
    bool factor_oracle = false, lincomb_oracle = false;
    int unroll_count = 10, verify_trials = 0, verify_length = 30;
    std::uint64_t verify_seed = 12345;

    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product from factored operands");
    add_operand_flags(tensor_cmd, tensor_op, 2);

    auto* mul_cmd = app.add_subcommand("mul", "full product polynomial, coefficients only");
    add_operand_flags(mul_cmd, mul_op, 2);

    auto* testfact_cmd = app.add_subcommand("testfact", "fast factorability screen");
    add_operand_flags(testfact_cmd, testfact_op, 1);

    auto* factor_cmd = app.add_subcommand("factor", "find all tensor factorizations");
    add_operand_flags(factor_cmd, factor_op, 1);
    factor_cmd->add_option("--terms", factor_terms, "guess the operator from a terms file first");
    factor_cmd->add_flag("--oracle", factor_oracle, "cross-check the search on small inputs");

    auto* lincomb_cmd = app.add_subcommand("lincomb", "decompose as lcm of two tensor products");
    add_operand_flags(lincomb_cmd, lincomb_op, 1);
    lincomb_cmd->add_flag("--oracle", lincomb_oracle, "cross-check the pair search");

    auto* guess_cmd = app.add_subcommand("guess", "minimal recurrence from terms");
    guess_cmd->add_option("--terms", guess_terms, "terms file, '-' for stdin")->required();

    auto* unroll_cmd = app.add_subcommand("unroll", "first terms of a recurrence");
    add_operand_flags(unroll_cmd, unroll_op, 1);
    unroll_cmd->add_option("--init", unroll_init, "initial values \"a0,a1,...\"")->required();
    unroll_cmd->add_option("-n,--count", unroll_count, "how many terms");

    auto* verify_cmd = app.add_subcommand("verify", "check a claimed factorization of a target");
    add_operand_flags(verify_cmd, verify_op, 1);
    verify_cmd->add_option("--fact", verify_fact, "factorization JSON file, '-' for stdin")
        ->required();
    verify_cmd->add_option("--trials", verify_trials, "also run randomized sequence witnesses");
    verify_cmd->add_option("--length", verify_length, "witness window length");
    verify_cmd->add_option("--seed", verify_seed, "seed for the randomized witnesses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (tensor_cmd->parsed()) return run_tensor(tensor_op, as_json);
        if (mul_cmd->parsed()) return run_mul(mul_op, as_json);
        if (testfact_cmd->parsed()) return run_testfact(testfact_op, as_json);
        if (factor_cmd->parsed())
            return run_factor(factor_op, factor_terms, as_json, factor_oracle);
        if (lincomb_cmd->parsed()) return run_lincomb(lincomb_op, as_json, lincomb_oracle);
        if (guess_cmd->parsed()) return run_guess(guess_terms, as_json);
        if (unroll_cmd->parsed()) return run_unroll(unroll_op, unroll_init, unroll_count, as_json);
        if (verify_cmd->parsed())
            return run_verify(verify_op, verify_fact, as_json, verify_trials, verify_length,
                              verify_seed);
    } catch (const cfactor::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    } catch (const cfactor::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
