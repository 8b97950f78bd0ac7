// dfhad: difference families and Hadamard matrices from the command line.
//
// Exit status: 0 success, 1 verification or precondition failure, 2 usage
// or input error.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfhad/arrays.hpp"
#include "dfhad/catalog.hpp"
#include "dfhad/error.hpp"
#include "dfhad/families.hpp"
#include "dfhad/pipeline.hpp"
#include "dfhad/serialize.hpp"

namespace {

using namespace dfhad;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotADifferenceFamily:
        case ErrorCode::PreconditionFailed:
        case ErrorCode::PostVerifyFailed:
        case ErrorCode::ArrayRealizationFailed:
        case ErrorCode::Z37ScanFailed:
        case ErrorCode::CoefficientOutOfRange:
        case ErrorCode::IdentityInStarComplement:
        case ErrorCode::CoefficientOverflow:
        case ErrorCode::NotPerfectSquareOrder: return kFailed;
        default: return kUsage;
    }
}

std::string element_text(const GroupSpec& g, ElementIndex x) {
    if (g.rank() == 1) return std::to_string(x);
    std::string s = "(";
    const auto r = g.element(x).residues;
    for (std::size_t j = 0; j < r.size(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
    return s + ")";
}

std::string subset_text(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + element_text(s.group(), s.members()[i]);
    return out + "}";
}

std::string factors_text(const GroupSpec& g) {
    std::string s = "[";
    for (std::size_t j = 0; j < g.rank(); ++j) s += (j ? "," : "") + std::to_string(g.factors()[j]);
    return s + "]";
}

void print_verdict(std::ostream& out, const GroupSpec& g, Condition c, const Verdict& v) {
    out << "  " << to_string(c);
    out << std::string(5 - to_string(c).size(), ' ') << to_string(v.status);
    if (v.witness) {
        out << "  witness "
            << (c == Condition::II ? "character " + element_text(g, *v.witness) : element_text(g, *v.witness));
    }
    if (!v.note.empty()) out << "  (" << v.note << ")";
    out << "\n";
}

void print_family(std::ostream& out, const DifferenceFamily& f) {
    out << "group: " << factors_text(f.group()) << "  order " << f.group().order() << "\n";
    out << "lambda: " << f.lambda() << "\nkind:";
    if (f.kinds().empty()) out << " (none)";
    for (auto k : f.kinds()) out << " " << to_string(k);
    out << "\nsymmetric: " << (f.symmetric() ? "yes" : "no") << "\nblocks:\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        out << "  D" << i << " (" << f.block(i).size() << ") = " << subset_text(f.block(i)) << "\n";
}

void print_building(std::ostream& out, const BuildingFamily& b) {
    out << "group: " << factors_text(b.group()) << "  order " << b.group().order() << "\nparts:\n";
    for (std::size_t i = 0; i < 8; ++i) out << "  A" << i << " = " << subset_text(b.part(i)) << "\n";
}

void print_spread(std::ostream& out, const DifferenceFamily& f) {
    const auto sp = check_spread(f);
    print_verdict(out, f.group(), Condition::I, sp.i);
    print_verdict(out, f.group(), Condition::II, sp.ii);
    print_verdict(out, f.group(), Condition::III, sp.iii);
    out << "  0 in all blocks: " << (sp.zero_in_all ? "yes" : "no")
        << ", in none: " << (sp.zero_in_none ? "yes" : "no") << "\n";
}

bool is_spread(Condition c) { return c == Condition::I || c == Condition::II || c == Condition::III; }
bool is_building(Condition c) {
    return c == Condition::A1 || c == Condition::A2 || c == Condition::A3 || c == Condition::A4;
}

int cmd_catalog_list() {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return kOk;
}

int cmd_catalog_show(const std::string& name) {
    const auto e = catalog_get(name);
    std::cout << "name: " << e.name << "\n" << e.description << "\n";
    if (e.is_family()) {
        print_family(std::cout, e.family());
        std::cout << "conditions:\n";
        if (e.family().size() == 4) {
            for (const auto& [c, v] : check_conditions(e.family()).verdicts)
                print_verdict(std::cout, e.family().group(), c, v);
        }
        const auto sq = static_cast<std::size_t>(std::lround(std::sqrt(e.family().group().order())));
        if (sq * sq == e.family().group().order() && e.family().size() == 4) print_spread(std::cout, e.family());
    } else {
        print_building(std::cout, e.building());
        std::cout << "conditions:\n";
        for (const auto& [c, v] : check_building(e.building()).verdicts)
            print_verdict(std::cout, e.building().group(), c, v);
    }
    if (!e.metadata.empty()) {
        std::cout << "metadata:\n";
        for (const auto& [k, v] : e.metadata) std::cout << "  " << k << " = " << v << "\n";
    }
    return kOk;
}

std::vector<Condition> parse_condition_list(const std::string& list) {
    std::vector<Condition> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto c = parse_condition(item);
        if (!c) throw Error(ErrorCode::ParseError, "unknown condition '" + item + "'");
        out.push_back(*c);
    }
    return out;
}

int cmd_verify(const std::string& path, const std::string& expect, const std::string& list) {
    const auto requested = parse_condition_list(list);
    if (!expect.empty() && expect != "building" && !parse_kind(expect))
        throw Error(ErrorCode::ParseError, "unknown kind '" + expect + "'");

    const auto doc = parse_family_document(read_file(path));
    std::map<Condition, bool> wanted;
    for (auto c : requested) wanted[c] = true;
    for (const auto& [name, holds] : doc.conditions) wanted[*parse_condition(name)] = holds;

    bool ok = true;
    std::map<Condition, Verdict> verdicts;
    const GroupSpec* group = nullptr;
    if (const auto* b = std::get_if<BuildingFamily>(&doc.payload)) {
        print_building(std::cout, *b);
        group = &b->group();
        if (!expect.empty() && expect != "building") {
            std::cout << "expected kind " << expect << ", found a building family\n";
            ok = false;
        }
        const auto rep = check_building(*b);
        for (const auto& [c, _] : wanted) {
            if (!is_building(c)) throw Error(ErrorCode::ParseError, "condition not defined for building families");
            verdicts[c] = rep.at(c);
        }
    } else {
        const auto& f = std::get<DifferenceFamily>(doc.payload);
        print_family(std::cout, f);
        group = &f.group();
        const auto declared = doc.kind.value_or("");
        for (const auto& k : {expect, declared}) {
            if (k.empty()) continue;
            const auto kind = parse_kind(k);
            if (!kind || !f.has_kind(*kind)) {
                std::cout << "expected kind " << k << ", not satisfied\n";
                ok = false;
            }
        }
        std::vector<Condition> four;
        bool spread = false;
        for (const auto& [c, _] : wanted) {
            if (is_building(c)) throw Error(ErrorCode::ParseError, "condition defined for building families only");
            if (is_spread(c))
                spread = true;
            else
                four.push_back(c);
        }
        if (!four.empty()) verdicts.merge(check_conditions(f, four).verdicts);
        if (spread) {
            const auto sp = check_spread(f);
            verdicts[Condition::I] = sp.i;
            verdicts[Condition::II] = sp.ii;
            verdicts[Condition::III] = sp.iii;
        }
    }
    if (!wanted.empty()) std::cout << "conditions:\n";
    for (const auto& [c, expected] : wanted) {
        const auto& v = verdicts.at(c);
        print_verdict(std::cout, *group, c, v);
        if (v.holds() != expected) {
            std::cout << "  -> " << to_string(c) << " expected to " << (expected ? "hold" : "fail") << "\n";
            ok = false;
        }
    }
    std::cout << (ok ? "verified" : "verification failed") << "\n";
    return ok ? kOk : kFailed;
}

int cmd_construct(const std::string& expr, const std::string& out) {
    auto v = evaluate_pipeline(expr);
    std::string text;
    if (const auto* f = std::get_if<DifferenceFamily>(&v)) {
        print_family(std::cout, *f);
        text = to_json(*f);
    } else if (const auto* b = std::get_if<BuildingFamily>(&v)) {
        print_building(std::cout, *b);
        text = to_json(*b);
    } else {
        throw Error(ErrorCode::ParseError, "construct needs a family expression; use `hadamard` for matrices");
    }
    write_file(out, text);
    std::cout << "wrote " << out << "\n";
    return kOk;
}

int cmd_hadamard(const std::string& expr, const std::string& out, bool full) {
    ArrayOptions opt;
    opt.full_check = full;
    auto v = evaluate_pipeline(expr, opt);
    HadamardResult res;
    if (auto* h = std::get_if<HadamardResult>(&v))
        res = std::move(*h);
    else if (const auto* f = std::get_if<DifferenceFamily>(&v))
        res = hadamard_from_family(*f, opt);
    else
        throw Error(ErrorCode::ParseError, "expression yields neither a matrix nor a difference family");
    if (!res.frozen_border)
        std::cerr << "note: frozen border pattern did not fit this instance; per-instance search was used\n";
    write_file(out, matrix_to_text(res.matrix));
    std::cout << "order " << res.matrix.order() << " via " << res.scheme << ", "
              << (res.full_check ? "full H H^T = nI check" : "block-level Gram check") << "\nwrote " << out << "\n";
    return kOk;
}

int cmd_check(const std::string& path) {
    const auto m = matrix_from_text(read_file(path));
    if (is_hadamard(m)) {
        std::cout << "hadamard: order " << m.order() << "\n";
        return kOk;
    }
    const auto rows = m.rows();
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = i + 1; j < m.order(); ++j) {
            const auto d = kernels::row_dot(rows, i, rows, j);
            if (d != 0) {
                std::cout << "not hadamard: rows " << i << " and " << j << " have inner product " << d << "\n";
                return kFailed;
            }
        }
    }
    return kFailed;
}

int cmd_prime_scan(std::uint64_t bound) {
    const auto scan = prime_scan(bound);
    const auto line = [](const char* label, const std::vector<std::uint64_t>& xs) {
        std::cout << label << " (" << xs.size() << "): ";
        for (std::size_t i = 0; i < xs.size(); ++i) std::cout << (i ? "," : "") << xs[i];
        std::cout << "\n";
    };
    line("2n^4+1", scan.two);
    line("18n^4+1", scan.eighteen);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Difference families of type H and Hadamard matrices"};
    app.require_subcommand(1);
    app.footer("Pipeline expressions:\n" + pipeline_help());

    auto* catalog = app.add_subcommand("catalog", "List or show built-in families");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "List entry names");
    auto* show = catalog->add_subcommand("show", "Print an entry with its condition table");
    std::string name;
    show->add_option("NAME", name)->required();

    auto* verify = app.add_subcommand("verify", "Verify a family document");
    std::string file, expect, conditions;
    verify->add_option("FILE", file)->required();
    verify->add_option("--expect", expect, "Required kind: H, H2star, H4star, H8star or building");
    verify->add_option("--conditions", conditions, "Comma-separated conditions that must hold, e.g. d2,d3");

    auto* construct = app.add_subcommand("construct", "Evaluate a pipeline and write the family document");
    std::string expr, out;
    construct->add_option("EXPR", expr)->required();
    construct->add_option("--out", out)->required();

    auto* hadamard = app.add_subcommand("hadamard", "Build a Hadamard matrix and write it");
    bool full = false;
    hadamard->add_option("--construct", expr, "Pipeline expression (matrix or family)")->required();
    hadamard->add_option("--out", out)->required();
    hadamard->add_flag("--full-check", full, "Evaluate H H^T = nI at every order");

    auto* check = app.add_subcommand("check", "Check a matrix file for H H^T = nI");
    check->add_option("FILE", file)->required();

    auto* scan = app.add_subcommand("prime-scan", "Odd n < bound with 2n^4+1 and 18n^4+1 prime");
    std::uint64_t bound = 0;
    scan->add_option("--bound", bound)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (catalog->parsed()) {
            if (catalog->get_subcommand("list")->parsed()) return cmd_catalog_list();
            return cmd_catalog_show(name);
        }
        if (verify->parsed()) return cmd_verify(file, expect, conditions);
        if (construct->parsed()) return cmd_construct(expr, out);
        if (hadamard->parsed()) return cmd_hadamard(expr, out, full);
        if (check->parsed()) return cmd_check(file);
        if (scan->parsed()) return cmd_prime_scan(bound);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return kUsage;
}
