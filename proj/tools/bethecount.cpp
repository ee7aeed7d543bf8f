// Command-line front end: every count, multiplicity, symmetry and
// completeness computation as a shell one-liner with exact decimal output.
//
// Exit codes: 0 success, 1 check failed, 2 bad input, 3 resource guard.

#include <bethecount/bethecount.hpp>
#include <bethecount/poly_json.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace bethecount;
using nlohmann::ordered_json;

namespace {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_bad_input = 2, exit_guard = 3 };

struct SuperSelect {
    int m = 0;
    int n = 0;
    SuperKind kind() const { return n == 1 ? SuperKind::sl11 : SuperKind::sl12; }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw validation_error("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw validation_error("not an integer: '" + s + "'");
    return value;
}

MagnonVector parse_magnons(const std::string& s) {
    MagnonVector m;
    for (const auto& part : split(s, ',')) m.push_back(parse_int(part));
    return m;
}

// "a2" or "a1+a2"; summands must form a contiguous interval of simple roots
PositiveRoot parse_root(const std::string& s, int rank) {
    std::vector<int> indices;
    for (const auto& part : split(s, '+')) {
        if (part.size() < 2 || part[0] != 'a')
            throw validation_error("expected a root like 'a1' or 'a1+a2', got '" + s + "'");
        indices.push_back(parse_int(part.substr(1)));
    }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i + 1] != indices[i] + 1)
            throw validation_error("'" + s + "' is not a contiguous sum of simple roots");
    const int lo = indices.front();
    const int hi = indices.back() + 1;
    if (lo < 1 || hi > rank + 1)
        throw validation_error("root '" + s + "' does not fit rank " + std::to_string(rank));
    return PositiveRoot(lo, hi);
}

std::vector<PositiveRoot> parse_roots(const std::string& s, int rank) {
    std::vector<PositiveRoot> roots;
    if (s.empty()) return roots;
    for (const auto& part : split(s, ',')) roots.push_back(parse_root(part, rank));
    return roots;
}

// "t1" or "t2+t3": a vanishing combination of twist angles, which must be
// contiguous so that it matches a positive root
PositiveRoot parse_zero_combo(const std::string& s, int rank) {
    std::vector<int> indices;
    for (const auto& part : split(s, '+')) {
        if (part.size() < 2 || part[0] != 't')
            throw validation_error("expected a combination like 't1' or 't2+t3', got '" + s + "'");
        indices.push_back(parse_int(part.substr(1)));
    }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i + 1] != indices[i] + 1)
            throw validation_error("'" + s +
                                   "' is not contiguous; only sums matching a root restore symmetry");
    const int lo = indices.front();
    const int hi = indices.back() + 1;
    if (lo < 1 || hi > rank + 1)
        throw validation_error("combination '" + s + "' does not fit rank " + std::to_string(rank));
    return PositiveRoot(lo, hi);
}

std::vector<PositiveRoot> parse_zero_combos(const std::string& s, int rank) {
    std::vector<PositiveRoot> roots;
    if (s.empty()) return roots;
    for (const auto& part : split(s, ',')) roots.push_back(parse_zero_combo(part, rank));
    return roots;
}

std::vector<Rat> parse_angles(const std::string& s, int rank) {
    std::vector<Rat> turns;
    for (const auto& part : split(s, ',')) {
        Rat r;
        if (r.set_str(part, 10) != 0 || r.get_den() == 0)
            throw validation_error("not a rational number of turns: '" + part + "'");
        r.canonicalize();
        turns.push_back(r);
    }
    if (static_cast<int>(turns.size()) != rank)
        throw validation_error("expected one angle per simple root");
    return turns;
}

// per-site diagrams: sites split by ';', rows by ','  e.g. "2,1;2;1"
std::vector<std::vector<int>> parse_diagrams(const std::string& s) {
    std::vector<std::vector<int>> diagrams;
    for (const auto& site : split(s, ';')) {
        std::vector<int> rows;
        for (const auto& row : split(site, ',')) rows.push_back(parse_int(row));
        diagrams.push_back(std::move(rows));
    }
    return diagrams;
}

SuperSelect parse_super(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw validation_error("expected --super m,n");
    SuperSelect sel{parse_int(parts[0]), parse_int(parts[1])};
    if (!(sel.m == 1 && (sel.n == 1 || sel.n == 2)))
        throw validation_error("only sl(1|1) and sl(1|2) are supported");
    return sel;
}

std::pair<long, long> parse_charge_pair(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw validation_error("expected --u1-charge a,b");
    return {parse_int(parts[0]), parse_int(parts[1])};
}

int env_threads() {
    const char* raw = std::getenv("BETHECOUNT_THREADS");
    if (!raw) return 1;
    try {
        const int n = std::stoi(raw);
        return n >= 1 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

std::string label_string(const BranchedLabel& label) {
    std::string out;
    for (const auto& comp : label.components) {
        out += "(";
        for (std::size_t i = 0; i < comp.rows.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(comp.rows[i]);
        }
        out += ")";
    }
    return out;
}

std::string magnon_string(const MagnonVector& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(m[i]);
    }
    return out;
}

ordered_json label_json(const BranchedLabel& label) {
    ordered_json comps = ordered_json::array();
    for (const auto& comp : label.components) comps.push_back(comp.rows);
    return comps;
}

std::vector<long> u1_charges(const BranchedLabel& label, long a, long b) {
    std::vector<long> charges;
    for (const auto& comp : label.components)
        if (comp.is_u1()) charges.push_back(a + b * comp.rows[0]);
    return charges;
}

struct CommonArgs {
    int rank = 0;
    std::string super_str;
    int twos = 1;
    int length = 1;
    std::string m_str;
    std::string dplus_str;
    std::string zeros_str;
    std::string angles_str;
    std::string format = "human";
    int threads = env_threads();

    bool has_super() const { return !super_str.empty(); }

    SubalgebraDecomposition decomposition(bool default_full) const {
        int sources = 0;
        if (!dplus_str.empty()) ++sources;
        if (!zeros_str.empty()) ++sources;
        if (!angles_str.empty()) ++sources;
        if (sources > 1)
            throw validation_error("--dplus, --zeros and --angles are mutually exclusive");
        if (!dplus_str.empty())
            return decomposition_from_subset(rank, parse_roots(dplus_str, rank));
        if (!zeros_str.empty())
            return preserved_roots(rank,
                                   TwistConfiguration::vanishing(rank, parse_zero_combos(zeros_str, rank)));
        if (!angles_str.empty())
            return preserved_roots(rank, TwistConfiguration::from_angles(rank, parse_angles(angles_str, rank)));
        return default_full ? SubalgebraDecomposition::full(rank)
                            : SubalgebraDecomposition::toral(rank);
    }

    void require_classical() const {
        if (has_super()) throw validation_error("this option set requires an A-type algebra");
        if (rank < 1) throw validation_error("a positive --r is required (or --super m,n)");
    }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool wants_m) {
    cmd->add_option("--r", args.rank, "rank of the A-type algebra (su(r+1))");
    cmd->add_option("--super", args.super_str, "superalgebra m,n (1,1 or 1,2)");
    cmd->add_option("--twos", args.twos, "integer 2s of the site representation")->required();
    cmd->add_option("--L", args.length, "number of sites")->required();
    if (wants_m) cmd->add_option("--M", args.m_str, "magnon charges, e.g. 2,1 (omit for a table)");
    cmd->add_option("--dplus", args.dplus_str, "preserved roots, e.g. a2 or a1+a2,a3");
    cmd->add_option("--zeros", args.zeros_str, "vanishing twist sums, e.g. t1,t2+t3");
    cmd->add_option("--angles", args.angles_str, "exact twist angles in turns, e.g. 1/3,2/3");
    cmd->add_option("--format", args.format, "output format: human, csv or json")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    cmd->add_option("--threads", args.threads, "worker threads for table jobs");
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountArgs {
    CommonArgs common;
    int impurity_twos = -1;
    std::string diagrams_str;
    bool brute = false;
};

int run_count(const CountArgs& args) {
    const auto& c = args.common;
    if (c.has_super()) {
        const auto sel = parse_super(c.super_str);
        if (c.m_str.empty()) throw validation_error("--M is required with --super");
        const MagnonVector m = parse_magnons(c.m_str);
        Int value;
        if (sel.kind() == SuperKind::sl11) {
            if (m.size() != 1) throw validation_error("sl(1|1) takes a single charge M");
            value = c_coefficient({1, c.twos, c.length}, m);
        } else {
            if (m.size() != 2) throw validation_error("sl(1|2) takes charges M1,M2");
            value = tj_c(c.twos, c.length, m[0], m[1]);
        }
        if (c.format == "json") {
            ordered_json doc;
            doc["command"] = "count";
            doc["algebra"] = sel.n == 1 ? "sl(1|1)" : "sl(1|2)";
            doc["twos"] = c.twos;
            doc["length"] = c.length;
            doc["M"] = m;
            doc["value"] = to_decimal(value);
            emit(doc);
        } else if (c.format == "csv") {
            std::cout << "value\n" << to_decimal(value) << "\n";
        } else {
            std::cout << to_decimal(value) << "\n";
        }
        return exit_ok;
    }

    c.require_classical();
    const SpinChainSpec spec{c.rank, c.twos, c.length};
    const bool kondo = args.impurity_twos >= 0;
    const bool mixed = !args.diagrams_str.empty();
    if (kondo && mixed) throw validation_error("--impurity and --diagrams are mutually exclusive");

    if (!c.m_str.empty()) {
        const MagnonVector m = parse_magnons(c.m_str);
        if (static_cast<int>(m.size()) != c.rank)
            throw validation_error("--M must list exactly r charges");
        Int value;
        if (kondo)
            value = kondo_c(spec, args.impurity_twos, m);
        else if (mixed)
            value = mixed_c(parse_diagrams(args.diagrams_str), c.rank, m);
        else if (args.brute)
            value = brute_force_c(spec, m);
        else
            value = c_coefficient(spec, m);
        if (c.format == "json") {
            ordered_json doc;
            doc["command"] = "count";
            doc["algebra"] = "su(" + std::to_string(c.rank + 1) + ")";
            doc["rank"] = c.rank;
            doc["twos"] = c.twos;
            doc["length"] = c.length;
            doc["M"] = m;
            doc["value"] = to_decimal(value);
            emit(doc);
        } else if (c.format == "csv") {
            std::cout << "value\n" << to_decimal(value) << "\n";
        } else {
            std::cout << to_decimal(value) << "\n";
        }
        return exit_ok;
    }

    if (kondo || mixed || args.brute)
        throw validation_error("tables are available for the uniform chain; pass --M");

    const auto rows = c_table(spec, c.threads);
    Int total(0);
    for (const auto& row : rows) total += row.mu;
    if (c.format == "json") {
        ordered_json doc;
        doc["command"] = "count";
        doc["algebra"] = "su(" + std::to_string(c.rank + 1) + ")";
        doc["rank"] = c.rank;
        doc["twos"] = c.twos;
        doc["length"] = c.length;
        ordered_json jrows = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["M"] = row.m;
            r["c"] = to_decimal(row.mu);
            jrows.push_back(std::move(r));
        }
        doc["rows"] = std::move(jrows);
        doc["total"] = to_decimal(total);
        emit(doc);
    } else if (c.format == "csv") {
        for (int i = 1; i <= c.rank; ++i) std::cout << "M" << i << ",";
        std::cout << "c\n";
        for (const auto& row : rows) std::cout << magnon_string(row.m) << "," << to_decimal(row.mu) << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << "M=" << magnon_string(row.m) << "  c=" << to_decimal(row.mu) << "\n";
        std::cout << "total=" << to_decimal(total) << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// mu
// ---------------------------------------------------------------------------

struct MuArgs {
    CommonArgs common;
    bool explain = false;
    std::string charge_str;
};

int run_mu(const MuArgs& args) {
    const auto& c = args.common;

    if (c.has_super()) {
        const auto sel = parse_super(c.super_str);
        if (c.m_str.empty()) throw validation_error("--M is required with --super");
        const MagnonVector m = parse_magnons(c.m_str);
        const Int value = mu_super(sel.kind(), c.twos, c.length, m);
        std::string stencil;
        if (args.explain) {
            MagnonVector clamped(m);
            for (auto& v : clamped) v = std::max(v, 0);
            stencil = format_stencil(super_inverse(sel.m, sel.n, DegreeBox::cover(clamped)),
                                     sel.n == 2 ? "ctJ" : "c");
        }
        if (c.format == "json") {
            ordered_json doc;
            doc["command"] = "mu";
            doc["algebra"] = sel.n == 1 ? "sl(1|1)" : "sl(1|2)";
            doc["twos"] = c.twos;
            doc["length"] = c.length;
            doc["M"] = m;
            if (args.explain) doc["stencil"] = stencil;
            doc["value"] = to_decimal(value);
            emit(doc);
        } else {
            if (args.explain) std::cout << "mu = " << stencil << "\n";
            std::cout << to_decimal(value) << "\n";
        }
        return exit_ok;
    }

    c.require_classical();
    const SpinChainSpec spec{c.rank, c.twos, c.length};
    const auto decomp = c.decomposition(/*default_full=*/true);
    const auto inv = partial_inverse(decomp, c.rank);
    const std::string stencil = format_stencil(inv);
    std::optional<std::pair<long, long>> charge;
    if (!args.charge_str.empty()) charge = parse_charge_pair(args.charge_str);

    if (!c.m_str.empty()) {
        const MagnonVector m = parse_magnons(c.m_str);
        if (static_cast<int>(m.size()) != c.rank)
            throw validation_error("--M must list exactly r charges");
        const Int value = mu_partial(spec, m, decomp);
        if (c.format == "json") {
            ordered_json doc;
            doc["command"] = "mu";
            doc["algebra"] = "su(" + std::to_string(c.rank + 1) + ")";
            doc["rank"] = c.rank;
            doc["twos"] = c.twos;
            doc["length"] = c.length;
            doc["type"] = decomp.type_string();
            doc["blocks"] = decomp.blocks();
            if (args.explain) {
                doc["stencil"] = stencil;
                doc["stencil_terms"] = poly_to_json(inv.poly());
            }
            doc["M"] = m;
            doc["value"] = to_decimal(value);
            emit(doc);
        } else if (c.format == "csv") {
            std::cout << "value\n" << to_decimal(value) << "\n";
        } else {
            if (args.explain)
                std::cout << "mu(" << magnon_string(m) << ") = " << stencil << "\n";
            std::cout << to_decimal(value) << "\n";
        }
        return exit_ok;
    }

    const auto rows = mu_table(spec, decomp, c.threads);
    Int total(0);
    for (const auto& row : rows) total += row.mu * row.dim;
    if (c.format == "json") {
        ordered_json doc;
        doc["command"] = "mu";
        doc["algebra"] = "su(" + std::to_string(c.rank + 1) + ")";
        doc["rank"] = c.rank;
        doc["twos"] = c.twos;
        doc["length"] = c.length;
        doc["type"] = decomp.type_string();
        doc["blocks"] = decomp.blocks();
        if (args.explain) doc["stencil"] = stencil;
        ordered_json jrows = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["M"] = row.m;
            r["Lambda"] = label_json(row.label);
            r["mu"] = to_decimal(row.mu);
            r["dim"] = to_decimal(row.dim);
            if (charge) r["u1_charges"] = u1_charges(row.label, charge->first, charge->second);
            jrows.push_back(std::move(r));
        }
        doc["rows"] = std::move(jrows);
        doc["total_mu_dim"] = to_decimal(total);
        emit(doc);
    } else if (c.format == "csv") {
        for (int i = 1; i <= c.rank; ++i) std::cout << "M" << i << ",";
        std::cout << "mu,dim,Lambda\n";
        for (const auto& row : rows)
            std::cout << magnon_string(row.m) << "," << to_decimal(row.mu) << ","
                      << to_decimal(row.dim) << ",\"" << label_string(row.label) << "\"\n";
    } else {
        if (args.explain) std::cout << "mu = " << stencil << "\n";
        for (const auto& row : rows) {
            std::cout << "M=" << magnon_string(row.m) << "  Lambda=" << label_string(row.label)
                      << "  mu=" << to_decimal(row.mu) << "  dim=" << to_decimal(row.dim);
            if (charge) {
                const auto qs = u1_charges(row.label, charge->first, charge->second);
                if (!qs.empty()) {
                    std::cout << "  q=";
                    for (std::size_t i = 0; i < qs.size(); ++i)
                        std::cout << (i ? ";" : "") << qs[i];
                }
            }
            std::cout << "\n";
        }
        std::cout << "total mu*dim=" << to_decimal(total) << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// symmetry
// ---------------------------------------------------------------------------

struct SymmetryArgs {
    int rank = 0;
    std::string zeros_str;
    std::string angles_str;
    std::string format = "human";
    bool zeros_given = false;
};

int run_symmetry(const SymmetryArgs& args) {
    if (args.rank < 1) throw validation_error("--r is required");
    if (args.zeros_given && !args.angles_str.empty())
        throw validation_error("--zeros and --angles are mutually exclusive");
    SubalgebraDecomposition decomp = SubalgebraDecomposition::toral(args.rank);
    if (!args.angles_str.empty())
        decomp = preserved_roots(args.rank, TwistConfiguration::from_angles(
                                                args.rank, parse_angles(args.angles_str, args.rank)));
    else
        decomp = preserved_roots(args.rank, TwistConfiguration::vanishing(
                                                args.rank, parse_zero_combos(args.zeros_str, args.rank)));

    if (args.format == "json") {
        ordered_json doc;
        doc["command"] = "symmetry";
        doc["rank"] = args.rank;
        doc["blocks"] = decomp.blocks();
        ordered_json preserved = ordered_json::array();
        for (const auto& root : decomp.preserved_roots()) preserved.push_back(root.name());
        doc["preserved"] = std::move(preserved);
        doc["type"] = decomp.type_string();
        doc["u1_count"] = decomp.u1_count();
        emit(doc);
    } else if (args.format == "csv") {
        std::cout << "type,u1_count\n" << decomp.type_string() << "," << decomp.u1_count() << "\n";
    } else {
        std::cout << "blocks =";
        for (const auto& block : decomp.blocks()) {
            std::cout << " {";
            for (std::size_t i = 0; i < block.size(); ++i)
                std::cout << (i ? "," : "") << block[i];
            std::cout << "}";
        }
        std::cout << "\n";
        std::cout << "preserved =";
        for (const auto& root : decomp.preserved_roots()) std::cout << " " << root.name();
        std::cout << "\n";
        std::cout << "type = " << decomp.type_string() << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const CommonArgs& args) {
    CompletenessReport report;
    std::string algebra;
    if (args.has_super()) {
        const auto sel = parse_super(args.super_str);
        report = super_completeness(sel.kind(), args.twos, args.length);
        algebra = sel.n == 1 ? "sl(1|1)" : "sl(1|2)";
    } else {
        args.require_classical();
        const SpinChainSpec spec{args.rank, args.twos, args.length};
        report = completeness_check(spec, args.decomposition(/*default_full=*/true), args.threads);
        algebra = "su(" + std::to_string(args.rank + 1) + ")";
    }

    if (args.format == "json") {
        ordered_json doc;
        doc["command"] = "check";
        doc["algebra"] = algebra;
        doc["twos"] = args.twos;
        doc["length"] = args.length;
        doc["total"] = to_decimal(report.total);
        doc["target"] = to_decimal(report.target);
        doc["labels"] = report.labels;
        doc["pass"] = report.pass;
        emit(doc);
    } else if (args.format == "csv") {
        std::cout << "total,target,pass\n"
                  << to_decimal(report.total) << "," << to_decimal(report.target) << ","
                  << (report.pass ? "true" : "false") << "\n";
    } else {
        std::cout << "total = " << to_decimal(report.total) << "\n";
        std::cout << "target = " << to_decimal(report.target) << "\n";
        std::cout << "result = " << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
    int max_length = 4;
    bool inject_fault = false;
    std::string format = "human";
};

struct VerifyResult {
    std::string name;
    bool pass;
    double seconds;
};

int run_verify(const VerifyArgs& args) {
    std::vector<VerifyResult> results;
    bool first_comparison = true;

    auto timed = [&](const std::string& name, auto&& body) {
        const auto start = std::chrono::steady_clock::now();
        bool pass = body();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        results.push_back({name, pass, dt.count()});
    };

    timed("c vs brute force", [&] {
        for (int rank = 1; rank <= 3; ++rank) {
            const int max_l = rank == 3 ? std::min(args.max_length, 3) : args.max_length;
            for (int twos = 1; twos <= 2; ++twos) {
                for (int length = 1; length <= max_l; ++length) {
                    const SpinChainSpec spec{rank, twos, length};
                    const auto brute = brute_force_c_table(spec);
                    for (const auto& m : magnon_domain(spec)) {
                        Int expected = c_coefficient(spec, m);
                        if (args.inject_fault && first_comparison) {
                            expected += 1;
                            first_comparison = false;
                        }
                        const auto it = brute.find(m);
                        const Int got = it == brute.end() ? Int(0) : it->second;
                        if (expected != got) return false;
                    }
                }
            }
        }
        return true;
    });

    timed("mu vs hook length (s=1/2)", [&] {
        for (int rank = 1; rank <= 3; ++rank) {
            for (int length = 1; length <= std::min(args.max_length + 2, 6); ++length) {
                const SpinChainSpec spec{rank, 1, length};
                const CoefficientTable table(spec);
                for (const auto& m : magnon_domain(spec)) {
                    const auto lam = young_from_magnons(spec, m);
                    const Int expected = lam ? hook_length_mu(*lam) : Int(0);
                    if (mu_untwisted(table, m) != expected) return false;
                }
            }
        }
        return true;
    });

    timed("mu vs character peeling", [&] {
        for (int rank = 1; rank <= 2; ++rank) {
            for (int twos = 1; twos <= 2; ++twos) {
                for (int length = 1; length <= std::min(args.max_length, 3); ++length) {
                    const SpinChainSpec spec{rank, twos, length};
                    const CoefficientTable table(spec);
                    const auto oracle = mu_oracle_table(spec);
                    for (const auto& m : magnon_domain(spec)) {
                        const auto it = oracle.find(m);
                        const Int expected = it == oracle.end() ? Int(0) : it->second;
                        if (mu_untwisted(table, m) != expected) return false;
                    }
                }
            }
        }
        return true;
    });

    timed("superalgebra closed forms (s=1/2)", [&] {
        for (int length = 1; length <= args.max_length + 4; ++length) {
            for (int m = 0; m <= length; ++m)
                if (mu_super(SuperKind::sl11, 1, length, {m}) != binomial(length - 1, m))
                    return false;
            if (!super_completeness(SuperKind::sl11, 1, length).pass) return false;
            if (!super_completeness(SuperKind::sl12, 1, length).pass) return false;
        }
        return true;
    });

    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (args.format == "json") {
        ordered_json doc;
        doc["command"] = "verify";
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
            ordered_json c;
            c["name"] = r.name;
            c["pass"] = r.pass;
            c["seconds"] = r.seconds;
            checks.push_back(std::move(c));
        }
        doc["checks"] = std::move(checks);
        doc["pass"] = all_pass;
        emit(doc);
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << (r.pass ? "ok   " : "FAIL ") << r.name << " (" << std::fixed
                 << std::setprecision(2) << r.seconds << " s)";
            std::cout << line.str() << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "checks failed") << "\n";
    }
    return all_pass ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact state counts for twisted, partially twisted and untwisted spin chains"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "restricted-occupancy coefficients c(M)");
    add_common(count, count_args.common, /*wants_m=*/true);
    count->add_option("--impurity", count_args.impurity_twos,
                      "integer 2s' of one impurity site (Kondo-type chain)");
    count->add_option("--diagrams", count_args.diagrams_str,
                      "per-site diagrams, rows comma-separated, sites ';'-separated");
    count->add_flag("--brute", count_args.brute, "count by direct enumeration instead");

    MuArgs mu_args;
    auto* mu = app.add_subcommand("mu", "multiplicities / branching coefficients");
    add_common(mu, mu_args.common, /*wants_m=*/true);
    mu->add_flag("--explain", mu_args.explain, "print the difference stencil");
    mu->add_option("--u1-charge", mu_args.charge_str,
                   "affine u(1) charge a,b reported as a+b*row (e.g. 4,-3)");

    SymmetryArgs sym_args;
    auto* symmetry = app.add_subcommand("symmetry", "unbroken subalgebra of a twist pattern");
    symmetry->add_option("--r", sym_args.rank, "rank of the A-type algebra")->required();
    symmetry->add_option("--zeros", sym_args.zeros_str, "vanishing twist sums, e.g. t1,t3")
        ->capture_default_str();
    symmetry->add_option("--angles", sym_args.angles_str, "exact twist angles in turns");
    symmetry->add_option("--format", sym_args.format, "human, csv or json")
        ->check(CLI::IsMember({"human", "csv", "json"}));

    CommonArgs check_args;
    auto* check = app.add_subcommand("check", "completeness: sum of mu*dim against dim H");
    add_common(check, check_args, /*wants_m=*/false);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "cross-check suite (independent oracles)");
    verify->add_option("--max-L", verify_args.max_length, "largest chain length in the suite");
    verify->add_flag("--inject-fault", verify_args.inject_fault,
                     "perturb one comparison (negative control)");
    verify->add_option("--format", verify_args.format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_input;
    }

    sym_args.zeros_given = symmetry->count("--zeros") > 0;

    try {
        if (*count) return run_count(count_args);
        if (*mu) return run_mu(mu_args);
        if (*symmetry) return run_symmetry(sym_args);
        if (*check) return run_check(check_args);
        if (*verify) return run_verify(verify_args);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_guard;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
