#pragma once

// Command-line front end shared by the gacodes executable and the tests: argument parsing,
// per-command report construction, and the golden-file suite.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chainring.hpp"
#include "codes.hpp"
#include "dihedral.hpp"
#include "equiv.hpp"
#include "error.hpp"
#include "format.hpp"
#include "idem.hpp"

#ifndef GACODES_GOLDEN_DIR
#define GACODES_GOLDEN_DIR "goldens"
#endif

namespace gacodes {

struct RunSpec {
    std::string command;
    std::string group;
    std::optional<std::uint64_t> q;
    std::string ring;
    std::string construction = "primitive";
    std::string format = "md";
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string suite = "paper-tables";
    std::string goldens = GACODES_GOLDEN_DIR;
    bool regenerate = false;
};

struct RunResult {
    Report report;
    int exit_code = 0;
};

inline const std::vector<std::string>& constructions() {
    static const std::vector<std::string> names{"primitive", "subgroup", "chain", "order-2pn", "prado",
                                                "two-prime", "three-prime", "essential"};
    return names;
}

/// Registers every subcommand and flag on app, writing into spec.
inline void configure_app(CLI::App& app, RunSpec& spec) {
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub, bool needs_q) {
        sub->add_option("--group", spec.group, "group, e.g. C9xC3 or D4")->required();
        auto q = sub->add_option("--q", spec.q, "field order (prime power)");
        if (needs_q) q->required();
        sub->add_option("--format", spec.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
        sub->add_option("--budget", spec.budget, "weight enumeration budget (q^k)");
        sub->add_option("--seed", spec.seed, "recorded in the JSON payload; no computation is randomized");
        sub->add_option("--out", spec.out, "write the report to this file");
    };
    for (const char* name : {"idempotents", "codes"}) {
        auto sub = app.add_subcommand(name, std::string(name) == "codes" ? "minimal codes: dimension and minimum weight"
                                                                          : "primitive idempotent systems");
        common(sub, true);
        sub->add_option("--construction", spec.construction, "primitive, subgroup, chain, order-2pn, prado, two-prime, three-prime or essential")
            ->check(CLI::IsMember(constructions()));
        sub->callback([&spec, name] { spec.command = name; });
    }
    auto eq = app.add_subcommand("equivalence", "G-equivalence classes of minimal codes");
    common(eq, true);
    eq->callback([&spec] { spec.command = "equivalence"; });
    auto dih = app.add_subcommand("dihedral", "central idempotents and codes of F_q D_n");
    common(dih, true);
    dih->callback([&spec] { spec.command = "dihedral"; });
    auto ch = app.add_subcommand("chainring", "ideal census and duals over Z_{p^k}");
    common(ch, false);
    ch->add_option("--ring", spec.ring, "chain ring, e.g. Z4")->required();
    ch->callback([&spec] { spec.command = "chainring"; });
    auto ver = app.add_subcommand("verify", "diff golden tables against fresh computations");
    ver->add_option("--suite", spec.suite, "golden suite name");
    ver->add_option("--goldens", spec.goldens, "golden root directory");
    ver->add_flag("--regenerate", spec.regenerate, "rewrite the golden files");
    ver->add_option("--format", spec.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    ver->add_option("--out", spec.out, "write the report to this file");
    ver->callback([&spec] { spec.command = "verify"; });
}

/// Parses a command line without the program name; CLI11 errors become ParseError.
inline RunSpec parse_args(const std::vector<std::string>& args) {
    RunSpec spec;
    CLI::App app{"gacodes"};
    configure_app(app, spec);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw ParseError(std::string("command line: ") + e.what());
    }
    return spec;
}

namespace detail {

inline std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

inline std::string str(std::uint64_t x) { return std::to_string(x); }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string distribution_text(const WeightDistribution& d) {
    std::vector<std::string> parts;
    for (std::size_t w = 0; w < d.counts.size(); ++w)
        if (d.counts[w]) parts.push_back(std::to_string(w) + ":" + std::to_string(d.counts[w]));
    return join(parts, " ");
}

inline std::uint64_t weight_budget(const RunSpec& s) { return s.budget.value_or(kDefaultWeightBudget); }

inline AbelianAlgebra abelian_algebra(const RunSpec& s) {
    if (!s.group.empty() && (s.group[0] == 'D' || s.group[0] == 'd'))
        throw PreconditionError("command '" + s.command + "' needs an abelian group; use the dihedral command for " + s.group);
    return make_abelian_algebra(AbelianGroup::parse(s.group), SmallField::of_order(*s.q));
}

inline std::uint32_t dihedral_n(const std::string& g) {
    if (g.size() < 2 || (g[0] != 'D' && g[0] != 'd') ||
        !std::all_of(g.begin() + 1, g.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || g.size() > 8)
        throw ParseError("dihedral group must look like D4, got '" + g + "'");
    return static_cast<std::uint32_t>(std::stoul(g.substr(1)));
}

/// The idempotent system named by --construction, validated.
inline FieldIdempotents build_system(const RunSpec& s) {
    const auto& c = s.construction;
    if (c == "prado" || c == "three-prime") {
        auto g = AbelianGroup::parse(s.group);
        const auto& f = g.factor_orders();
        if (c == "prado") {
            auto [p, m] = prime_power(g.order());
            if (f.size() != 1 || p != 2) throw PreconditionError("prado construction needs a cyclic 2-group C_{2^m}");
            return prado_mod8_idempotents(m, SmallField::of_order(*s.q));
        }
        if (*s.q != 2) throw PreconditionError("three-prime construction is over F_2");
        if (f.size() != 3 || !std::all_of(f.begin(), f.end(), [](auto n) { return is_prime(n); }))
            throw PreconditionError("three-prime construction needs C_p1 x C_p2 x C_p3");
        return three_prime_idempotents(f[0], f[1], f[2]);
    }
    auto a = abelian_algebra(s);
    FieldIdempotents sys;
    if (c == "primitive") sys = primitive_idempotents(a);
    else if (c == "subgroup") sys = idempotent_system(a);
    else if (c == "chain") sys = cyclic_chain_idempotents(a);
    else if (c == "order-2pn") sys = order_2pn_idempotents(a);
    else if (c == "two-prime") sys = two_prime_idempotents(a);
    else if (c == "essential") return essential_idempotents(a);
    else throw ParseError("unknown construction '" + c + "'");
    sys.validate();
    return sys;
}

inline std::string subgroup_cell(const FieldIdempotents& sys, std::size_t i) {
    const auto& l = sys.labels[i];
    return l.subgroup ? subgroup_name(sys.algebra->group(), *l.subgroup) : "";
}

inline Report run_idempotents(const RunSpec& s) {
    auto sys = build_system(s);
    Report r;
    r.command = "idempotents";
    r.summary.push_back("group " + s.group + ", field F" + str(*s.q) + ", construction " + s.construction);
    r.summary.push_back("members: " + str(sys.size()));
    if (s.construction != "essential") r.summary.push_back("orthogonal, idempotent, sum 1: yes");
    r.summary.push_back(std::string("construction hypotheses hold: ") + (sys.hypothesis_holds ? "yes" : "no"));
    Table t{"idempotents", {"label", "provenance", "subgroup", "support", "element"}, {}, sys.notes};
    for (std::size_t i = 0; i < sys.size(); ++i)
        t.add_row({sys.labels[i].name, to_string(sys.labels[i].kind), subgroup_cell(sys, i),
                   str(sys.members[i].weight()), sys.members[i].to_string()});
    r.tables.push_back(std::move(t));
    r.data["system"] = sys.to_json();
    return r;
}

inline Report run_codes(const RunSpec& s) {
    auto sys = build_system(s);
    Report r;
    r.command = "codes";
    r.summary.push_back("group " + s.group + ", field F" + str(*s.q) + ", construction " + s.construction);
    r.summary.push_back("codes: " + str(sys.size()));
    Table t{"minimal codes", {"label", "subgroup", "dimension", "min weight"}, {}, sys.notes};
    std::optional<FieldIdempotents> eh;
    if (s.construction == "primitive") {
        auto a = abelian_algebra(s);
        a.algebra = sys.algebra;
        eh = idempotent_system(a);
        t.notes.push_back("subgroup: the co-cyclic H (or G) whose e_H absorbs the primitive idempotent");
    }
    std::size_t total = 0;
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        auto code = code_from_idempotent(sys.members[i]);
        auto w = minimum_weight(code, weight_budget(s));
        total += code.dimension();
        auto sub = eh ? subgroup_name(sys.algebra->group(), phi_map(*eh, sys.members[i])) : subgroup_cell(sys, i);
        t.add_row({sys.labels[i].name, sub, str(code.dimension()), str(w)});
        arr.push_back({{"label", sys.labels[i].name}, {"dimension", code.dimension()}, {"min_weight", w}});
    }
    r.summary.push_back("dimension total: " + str(total));
    r.tables.push_back(std::move(t));
    r.data["codes"] = arr;
    if (s.construction == "prado") {
        auto m = static_cast<unsigned>(prime_power(AbelianGroup::parse(s.group).order()).second);
        Table chain{"chain codes", {"code", "dimension", "min weight", "expected dimension", "expected weight", "visible basis"}, {}, {}};
        for (const auto& row : cyclic_2m_parameters(m, SmallField::of_order(*s.q), weight_budget(s))) {
            auto code = code_from_idempotent(row.idempotent);
            bool visible = visible_basis_check(code, translate_basis(row.idempotent, 1, code.dimension()));
            chain.add_row({row.label, str(row.dimension), str(row.weight), str(row.expected_dimension),
                           str(row.expected_weight), visible ? "yes" : "no"});
            if (!row.matches()) r.findings.push_back(row.label + ": computed (" + str(row.dimension) + ", " + str(row.weight) +
                                                     ") differs from the formula (" + str(row.expected_dimension) + ", " +
                                                     str(row.expected_weight) + ")");
        }
        r.tables.push_back(std::move(chain));
    }
    return r;
}

inline Report run_equivalence(const RunSpec& s) {
    auto a = abelian_algebra(s);
    auto rep = g_equivalence_classes(a, kDefaultAutBudget, weight_budget(s));
    auto census = miller_census(rep);
    const auto& tab = a.table();
    Report r;
    r.command = "equivalence";
    r.summary.push_back("group " + a.group.name() + ", field F" + str(*s.q));
    r.summary.push_back("primitive idempotents: " + str(rep.primitives.size()));
    r.summary.push_back("automorphisms: " + str(rep.automorphism_count));
    r.summary.push_back("G-equivalence classes: " + str(census.classes) + ", tau(exponent) = " + str(census.tau));
    r.summary.push_back(std::string("classes equal tau: ") + (census.theorem_a_holds ? "yes" : "no"));
    r.summary.push_back(std::string("inequivalent classes share a weight distribution: ") + (census.theorem_b_holds() ? "no" : "yes"));
    Table t{"classes", {"class", "size", "dimension", "min weight", "subgroups", "weight distribution"}, {}, {}};
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        const auto& cl = rep.classes[c];
        std::vector<std::string> subs;
        for (const auto& h : cl.phi_images) subs.push_back(subgroup_name(tab, h));
        t.add_row({str(c), str(cl.members.size()), str(cl.dimension), str(cl.min_weight), join(subs, " "),
                   distribution_text(cl.distribution)});
    }
    r.tables.push_back(std::move(t));
    Table pairs{"equal-distribution pairs", {"class", "class"}, {}, {}};
    for (auto [i, j] : census.equal_distribution_pairs) pairs.add_row({str(i), str(j)});
    r.tables.push_back(std::move(pairs));
    r.findings = rep.findings;
    r.data = rep.to_json();
    return r;
}

inline Report run_dihedral(const RunSpec& s) {
    auto n = dihedral_n(s.group);
    auto tab = dutra_code_table(n, *s.q, weight_budget(s));
    Report r;
    r.command = "dihedral";
    r.summary.push_back("group " + tab.system.group.name() + ", field F" + str(*s.q));
    r.summary.push_back("minimality condition: " + tab.system.condition + ", printed table: " + tab.system.table);
    r.summary.push_back("simple components over F_q: " + str(tab.counts.over_fq) + ", over Q: " + str(tab.counts.over_q));
    r.summary.push_back("central orthogonal idempotents, sum 1: " + str(tab.system.system.size()));
    Table t{"codes", {"idempotent", "d", "dimension", "min weight", "printed dimension", "printed weight", "agrees"}, {}, {}};
    nlohmann::json arr = nlohmann::json::array();
    std::size_t total = 0;
    for (const auto& row : tab.rows) {
        total += row.dimension;
        t.add_row({row.row.label, str(row.row.character_order), str(row.dimension), str(row.weight),
                   str(row.row.printed_dimension), str(row.row.printed_weight), row.matches_printed() ? "yes" : "no"});
        arr.push_back({{"label", row.row.label}, {"dimension", row.dimension}, {"min_weight", row.weight},
                       {"printed_dimension", row.row.printed_dimension}, {"printed_weight", row.row.printed_weight}});
    }
    r.summary.push_back("dimension total: " + str(total));
    r.tables.push_back(std::move(t));
    r.findings = tab.findings;
    r.data["codes"] = arr;
    return r;
}

/// Annihilator and enumeration cross-checks run only at this size of RG.
inline constexpr std::uint64_t kChainCrossCheckLimit = 1ULL << 16;

inline Report run_chainring(const RunSpec& s) {
    auto ring = ChainRing::parse(s.ring);
    auto space = ring_code_space(ring, AbelianGroup::parse(s.group));
    auto codes = enumerate_ring_codes(space);
    boost::multiprecision::cpp_int rg = boost::multiprecision::pow(boost::multiprecision::cpp_int(ring.size()),
                                                                   static_cast<unsigned>(space.length()));
    const bool cross = rg <= kChainCrossCheckLimit;
    Report r;
    r.command = "chainring";
    r.summary.push_back("ring " + ring.name() + ", group " + space.group.name() + ", t = " + str(space.t()));
    r.summary.push_back(str(codes.size()) + " codes");
    r.summary.push_back(std::string("counts and duals cross-checked by enumeration: ") + (cross ? "yes" : "no"));
    Table lifted{"lifted idempotents", {"index", "width", "involution partner", "element"}, {}, {}};
    for (std::size_t i = 0; i < space.components(); ++i)
        lifted.add_row({"e_" + str(i), str(space.widths[i]), "e_" + str(space.involution[i]), space.lifted.members[i].to_string()});
    r.tables.push_back(std::move(lifted));
    auto tuple = [](const RingCode& c) {
        std::vector<std::string> v;
        for (auto k : c.exponents) v.push_back(std::to_string(k));
        return "(" + join(v, ",") + ")";
    };
    Table t{"codes", {"exponents", "words", "dual exponents", "dual words", "self-dual"}, {}, {}};
    nlohmann::json arr = nlohmann::json::array();
    std::size_t self_dual = 0;
    for (const auto& c : codes) {
        auto d = dual_code(space, c);
        auto n = codeword_count(space, c), nd = codeword_count(space, d);
        verify(n * nd == rg, "|C| |C^perp| != |R|^n");
        if (cross) {
            auto words = ring_code_words(space, c);
            verify(words.size() == n, "codeword count disagrees with enumeration");
            verify(euclidean_annihilator(space, c) == ring_code_words(space, d), "dual formula disagrees with the annihilator");
        }
        bool sd = is_self_dual(space, c);
        self_dual += sd;
        t.add_row({tuple(c), n.str(), tuple(d), nd.str(), sd ? "yes" : "no"});
        arr.push_back(to_json(space, c));
    }
    r.summary.push_back("self-dual codes: " + str(self_dual));
    r.tables.push_back(std::move(t));
    Table mins{"minimal codes", {"exponents", "words"}, {}, {}};
    for (const auto& c : minimal_ring_codes(space)) {
        if (cross) verify(is_minimal_ring_code(space, c), "a code <p^{t-1} e_i> is not minimal");
        mins.add_row({tuple(c), codeword_count(space, c).str()});
    }
    r.tables.push_back(std::move(mins));
    r.data["codes"] = arr;
    return r;
}

struct Golden {
    std::string name;
    std::string anchor;
    std::string command;
};

inline const std::vector<Golden>& golden_suite(const std::string& suite) {
    static const std::vector<Golden> paper{
        {"cp2xcp_p3", "minimal codes of F2(C_{p^2} x C_p) at p = 3: one (dim, weight) row per primitive idempotent",
         "codes --group C9xC3 --q 2"},
        {"cpnxcp_p3_n3", "G-equivalence classes of minimal codes of F2(C_{p^n} x C_p) at p = 3, n = 3",
         "equivalence --group C27xC3 --q 2"},
        {"dihedral_n3_q5", "central idempotents of F5 D3 and their codes (odd prime power n table)",
         "dihedral --group D3 --q 5"},
        {"dihedral_n4_q3", "central idempotents of F3 D4 and their codes (2^m table)", "dihedral --group D4 --q 3"},
        {"dihedral_n9_q5", "central idempotents of F5 D9 and their codes (odd prime power n table)",
         "dihedral --group D9 --q 5 --budget 268435456"},
        {"cyclic2m_mod8_m3_q3", "explicit primitive idempotents of F3 C8 for q = 3 mod 8, with chain code parameters",
         "codes --group C8 --q 3 --construction prado"},
        {"cyclic2m_mod8_m4_q3", "explicit primitive idempotents of F3 C16 for q = 3 mod 8, with chain code parameters",
         "codes --group C16 --q 3 --construction prado"},
        {"three_prime_3_5_11", "the fourteen idempotents of F2(C3 x C5 x C11) and their codes",
         "codes --group C3xC5xC11 --q 2 --construction three-prime"},
        {"chainring_z4_c7", "cyclic codes of length 7 over Z4: census, word counts and duals",
         "chainring --ring Z4 --group C7"},
    };
    if (suite == "paper-tables") return paper;
    throw ParseError("unknown golden suite '" + suite + "'");
}

}  // namespace detail

inline Report run_report(const RunSpec& s);

inline std::string golden_text(const detail::Golden& g) {
    auto spec = parse_args(detail::split_words(g.command));
    std::string out = "<!-- golden: " + g.name + " -->\n<!-- mirrors: " + g.anchor + " -->\n<!-- command: " + g.command + " -->\n\n";
    return out + to_markdown(run_report(spec));
}

/// Regenerates every golden of the suite and diffs it against the stored file.
inline RunResult run_verify(const RunSpec& s) {
    RunResult res;
    auto& r = res.report;
    r.command = "verify";
    const auto dir = std::filesystem::path(s.goldens) / s.suite;
    const auto& suite = detail::golden_suite(s.suite);
    r.summary.push_back("suite " + s.suite + ": " + detail::str(suite.size()) + " goldens");
    Table t{"goldens", {"golden", "status"}, {}, {}};
    std::size_t bad = 0;
    if (s.regenerate) std::filesystem::create_directories(dir);
    for (const auto& g : suite) {
        auto path = dir / (g.name + ".md");
        auto fresh = golden_text(g);
        std::string status;
        if (s.regenerate) {
            std::ofstream(path, std::ios::binary) << fresh;
            status = "regenerated";
        } else {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                status = "missing";
            } else {
                std::stringstream ss;
                ss << in.rdbuf();
                status = ss.str() == fresh ? "match" : "mismatch";
            }
            if (status != "match") ++bad;
        }
        t.add_row({g.name, status});
    }
    r.tables.push_back(std::move(t));
    r.summary.push_back(bad ? detail::str(bad) + " golden(s) differ" : "all goldens agree");
    res.exit_code = bad ? 1 : 0;
    return res;
}

inline Report run_report(const RunSpec& s) {
    Report r;
    if (s.command == "idempotents") r = detail::run_idempotents(s);
    else if (s.command == "codes") r = detail::run_codes(s);
    else if (s.command == "equivalence") r = detail::run_equivalence(s);
    else if (s.command == "dihedral") r = detail::run_dihedral(s);
    else if (s.command == "chainring") r = detail::run_chainring(s);
    else if (s.command == "verify") return run_verify(s).report;
    else throw ParseError("unknown command '" + s.command + "'");
    if (s.seed) r.data["seed"] = *s.seed;
    return r;
}

inline RunResult run(const RunSpec& s) {
    if (s.command == "verify") return run_verify(s);
    return {run_report(s), 0};
}

/// Maps the error taxonomy onto exit codes: parse and precondition 2, budget 3, verification 1.
inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
    if (dynamic_cast<const VerificationError*>(&e)) return 1;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const PreconditionError*>(&e)) return 2;
    return 1;
}

}  // namespace gacodes
