// nring: neural codes, neural ideals, and receptive-field relations on the
// command line. Exit codes: 0 ok/pass, 1 claim failure or negative membership,
// 2 usage or parse error, 3 undecided (resource budget hit).

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "nring/code.hpp"
#include "nring/ideal.hpp"
#include "nring/polyring.hpp"
#include "nring/relations.hpp"
#include "nring/report.hpp"
#include "nring/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

nring::MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return nring::MonomialOrder::grevlex();
    if (name == "grlex") return nring::MonomialOrder::grlex();
    if (name == "lex") return nring::MonomialOrder::lex();
    throw nring::CodeError("unknown monomial order: " + name);
}

struct CommonArgs {
    int n = 0;
    std::string code_text;
    std::string poly_text;
    std::string order_name = "grevlex";
    std::string format = "text";
    std::size_t budget_pairs = 200000;
};

void add_order_flag(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--order", args.order_name, "monomial order: grevlex|grlex|lex")
        ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
}

void add_format_flag(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"neural ideals and receptive-field relations over F2[x1..xn]"};
    app.require_subcommand(1);

    CommonArgs args;

    // code parse
    CLI::App* code_cmd = app.add_subcommand("code", "neural code utilities");
    code_cmd->require_subcommand(1);
    CLI::App* code_parse = code_cmd->add_subcommand("parse", "parse and canonicalize a code");
    code_parse->add_option("--code", args.code_text, "code text")->required();
    code_parse->add_option("--n", args.n, "neuron count")->required();
    add_format_flag(code_parse, args);

    // ideal gens / gb
    CLI::App* ideal_cmd = app.add_subcommand("ideal", "neural ideal queries");
    ideal_cmd->require_subcommand(1);
    CLI::App* ideal_gens = ideal_cmd->add_subcommand("gens", "pseudo-monomial generators of J_C");
    ideal_gens->add_option("--code", args.code_text)->required();
    ideal_gens->add_option("--n", args.n)->required();
    add_format_flag(ideal_gens, args);
    CLI::App* ideal_gb = ideal_cmd->add_subcommand("gb", "reduced Groebner basis of J_C");
    ideal_gb->add_option("--code", args.code_text)->required();
    ideal_gb->add_option("--n", args.n)->required();
    ideal_gb->add_option("--budget", args.budget_pairs, "max Buchberger pairs");
    add_order_flag(ideal_gb, args);
    add_format_flag(ideal_gb, args);

    // member
    CLI::App* member_cmd = app.add_subcommand("member", "polynomial membership in J_C or I(C)");
    std::string ideal_choice;
    member_cmd->add_option("--in", ideal_choice, "which ideal: J|I")
        ->required()
        ->check(CLI::IsMember({"J", "I"}));
    member_cmd->add_option("--poly", args.poly_text)->required();
    member_cmd->add_option("--code", args.code_text)->required();
    member_cmd->add_option("--n", args.n)->required();
    member_cmd->add_option("--budget", args.budget_pairs, "max Buchberger pairs");
    add_order_flag(member_cmd, args);

    // relations scan
    CLI::App* relations_cmd = app.add_subcommand("relations", "receptive-field relations");
    relations_cmd->require_subcommand(1);
    CLI::App* scan_cmd = relations_cmd->add_subcommand("scan", "verdicts for every parameter");
    std::string kinds_text = "T1,T2,T3,T4,T5,T6,T4mod,T5mod,T6mod";
    int max_n = 4;
    scan_cmd->add_option("--code", args.code_text)->required();
    scan_cmd->add_option("--n", args.n)->required();
    scan_cmd->add_option("--kinds", kinds_text, "comma-separated relation kinds");
    scan_cmd->add_option("--max-n", max_n, "largest n the scan accepts");
    scan_cmd->add_option("--budget", args.budget_pairs, "max Buchberger pairs");
    add_order_flag(scan_cmd, args);
    add_format_flag(scan_cmd, args);

    // verify
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification claims");
    std::string claim_id;
    nring::VerifyOptions vopts;
    bool negate = false;
    verify_cmd->add_option("claim", claim_id, "claim id or 'all' or 'list'")->required();
    verify_cmd->add_option("--n", vopts.n, "highest code level swept");
    verify_cmd->add_option("--sample", vopts.sample, "sampled codes at n=4");
    verify_cmd->add_option("--seed", vopts.seed, "sampling seed");
    verify_cmd->add_flag("--exhaustive-n4", vopts.exhaustive_n4, "sweep all codes at n=4");
    verify_cmd->add_flag("--negate-membership", negate,
                         "mutation hook: flip both membership answers (claims must fail)");
    verify_cmd->add_flag("--negate-j", vopts.negate_j, "mutation hook: flip J_C answers only");
    verify_cmd->add_flag("--negate-i", vopts.negate_i, "mutation hook: flip I(C) answers only");
    verify_cmd->add_option("--budget", args.budget_pairs, "max Buchberger pairs");
    add_order_flag(verify_cmd, args);
    add_format_flag(verify_cmd, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        nring::MonomialOrder order = order_from_name(args.order_name);
        nring::BuchbergerBudget budget{args.budget_pairs, 64};
        bool json = args.format == "json";

        if (code_parse->parsed()) {
            nring::NeuralCode code = nring::parse_code(args.code_text, args.n);
            if (json) {
                nlohmann::ordered_json j;
                j["n"] = code.n();
                j["code"] = nring::format_code(code);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << nring::format_code(code) << "\n";
            }
            return kExitOk;
        }

        if (ideal_gens->parsed()) {
            nring::NeuralCode code = nring::parse_code(args.code_text, args.n);
            auto pms = nring::neural_ideal_pseudo_monomials(code);
            if (json) {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& pm : pms) j.push_back(nring::format_pseudo_monomial(pm));
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& pm : pms) std::cout << nring::format_pseudo_monomial(pm) << "\n";
            }
            return kExitOk;
        }

        if (ideal_gb->parsed()) {
            nring::NeuralCode code = nring::parse_code(args.code_text, args.n);
            nring::GroebnerBasis gb =
                nring::buchberger(nring::neural_ideal_generators(code), order, budget);
            if (json) {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& g : gb.basis) j.push_back(nring::format_poly(g, order));
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& g : gb.basis) std::cout << nring::format_poly(g, order) << "\n";
            }
            return kExitOk;
        }

        if (member_cmd->parsed()) {
            nring::NeuralCode code = nring::parse_code(args.code_text, args.n);
            nring::Polynomial f = nring::parse_poly(args.poly_text, args.n);
            bool in = ideal_choice == "J" ? nring::member_J(f, code, order, budget)
                                          : nring::member_I(f, code);
            std::cout << (in ? "true" : "false") << "\n";
            return in ? kExitOk : kExitFalse;
        }

        if (scan_cmd->parsed()) {
            nring::NeuralCode code = nring::parse_code(args.code_text, args.n);
            std::set<nring::RelationKind> kinds;
            std::size_t pos = 0;
            while (pos <= kinds_text.size()) {
                std::size_t comma = kinds_text.find(',', pos);
                if (comma == std::string::npos) comma = kinds_text.size();
                std::string name = kinds_text.substr(pos, comma - pos);
                if (!name.empty()) {
                    auto kind = nring::kind_from_name(name);
                    if (!kind) throw nring::CodeError("unknown relation kind: " + name);
                    kinds.insert(*kind);
                }
                pos = comma + 1;
            }
            nring::MembershipOracle oracle(order, budget);
            auto verdicts = nring::scan_relations(code, kinds, oracle, max_n);
            if (json) {
                std::cout << nring::to_json(verdicts).dump() << "\n";
            } else {
                for (const auto& v : verdicts) std::cout << nring::format_text(v) << "\n";
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            vopts.order = order;
            vopts.budget = budget;
            if (negate) {
                vopts.negate_j = true;
                vopts.negate_i = true;
            }
            if (claim_id == "list") {
                for (const std::string& id : nring::claim_ids()) std::cout << id << "\n";
                return kExitOk;
            }
            std::vector<nring::Claim> claims;
            if (claim_id == "all")
                claims = nring::run_all_claims(vopts);
            else
                claims.push_back(nring::run_claim(claim_id, vopts));
            if (json) {
                std::cout << nring::to_json(claims).dump(2) << "\n";
            } else {
                for (const auto& c : claims) std::cout << nring::format_text(c) << "\n";
            }
            bool any_fail = false, any_undecided = false;
            for (const auto& c : claims) {
                any_fail |= c.status == nring::ClaimStatus::fail;
                any_undecided |= c.status == nring::ClaimStatus::undecided;
            }
            if (any_fail) return kExitFalse;
            if (any_undecided) return kExitUndecided;
            return kExitOk;
        }

        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const nring::UndecidedError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const nring::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
