#include "dfhad/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <vector>

#include "dfhad/catalog.hpp"
#include "dfhad/constructions.hpp"
#include "dfhad/error.hpp"
#include "dfhad/serialize.hpp"

namespace dfhad {

namespace {

[[noreturn]] void syntax(const std::string& what, std::size_t pos) {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos));
}

using Args = std::vector<PipelineValue>;

struct Function {
    std::string signature;
    std::function<PipelineValue(const Args&, const ArrayOptions&)> call;
};

const char* type_name(const PipelineValue& v) {
    switch (v.index()) {
        case 0: return "number";
        case 1: return "symbol";
        case 2: return "family";
        case 3: return "building family";
        default: return "matrix";
    }
}

template <class T>
const T& arg(const Args& a, std::size_t i, const char* fn) {
    if (const auto* p = std::get_if<T>(&a[i])) return *p;
    throw Error(ErrorCode::ParseError, std::string(fn) + ": argument " + std::to_string(i + 1) + " has type " +
                                           type_name(a[i]));
}

std::uint64_t number(const Args& a, std::size_t i, const char* fn) {
    const auto n = arg<std::int64_t>(a, i, fn);
    if (n < 0) throw Error(ErrorCode::BadParameter, std::string(fn) + ": negative argument");
    return static_cast<std::uint64_t>(n);
}

const DifferenceFamily& family(const Args& a, std::size_t i, const char* fn) {
    return arg<DifferenceFamily>(a, i, fn);
}

const std::map<std::string, Function>& functions() {
    static const std::map<std::string, Function> table = {
        {"catalog", {"catalog(NAME)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             auto e = catalog_get(arg<Symbol>(a, 0, "catalog").text);
             if (e.is_family()) return e.family();
             return e.building();
         }}},
        {"cyclotomic", {"cyclotomic(q)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return cyclotomic_type_h(number(a, 0, "cyclotomic")).family;
         }}},
        {"paley", {"paley(q, h2|h4)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             const auto& k = arg<Symbol>(a, 1, "paley").text;
             if (k != "h2" && k != "h4") throw Error(ErrorCode::ParseError, "paley: kind must be h2 or h4");
             return paley_families(number(a, 0, "paley"), k == "h2" ? Kind::H2star : Kind::H4star);
         }}},
        {"product_z2", {"product_z2(D, S)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return product_z2(family(a, 0, "product_z2"), family(a, 1, "product_z2"));
         }}},
        {"product_z3", {"product_z3(D, S)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return product_z3(family(a, 0, "product_z3"), family(a, 1, "product_z3"));
         }}},
        {"product_z5", {"product_z5(D)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return product_z5(family(a, 0, "product_z5"));
         }}},
        {"product_h8", {"product_h8(D, B)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return product_h8(family(a, 0, "product_h8"), arg<BuildingFamily>(a, 1, "product_h8"));
         }}},
        {"bridge", {"bridge(building | family)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             if (const auto* b = std::get_if<BuildingFamily>(&a[0])) return building_to_family(*b);
             return family_to_building(family(a, 0, "bridge"));
         }}},
        {"complement", {"complement(D)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return complement_family(family(a, 0, "complement"));
         }}},
        {"turyn", {"turyn(D, F)", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             return turyn_recursion(family(a, 0, "turyn"), family(a, 1, "turyn")).family;
         }}},
        {"load", {"load(\"file.json\")", [](const Args& a, const ArrayOptions&) -> PipelineValue {
             auto doc = parse_family_document(read_file(arg<Symbol>(a, 0, "load").text));
             if (auto* f = std::get_if<DifferenceFamily>(&doc.payload)) return std::move(*f);
             return std::get<BuildingFamily>(std::move(doc.payload));
         }}},
        {"gs", {"gs(D)", [](const Args& a, const ArrayOptions& o) -> PipelineValue {
             return goethals_seidel(family(a, 0, "gs"), o);
         }}},
        {"ww", {"ww(D)", [](const Args& a, const ArrayOptions& o) -> PipelineValue {
             return wallis_whiteman(family(a, 0, "ww"), o);
         }}},
        {"szekeres", {"szekeres(D)", [](const Args& a, const ArrayOptions& o) -> PipelineValue {
             return szekeres(family(a, 0, "szekeres"), o);
         }}},
        {"kharaghani", {"kharaghani(D)", [](const Args& a, const ArrayOptions& o) -> PipelineValue {
             return kharaghani(family(a, 0, "kharaghani"), o);
         }}},
    };
    return table;
}

std::size_t arity(const std::string& signature) {
    if (signature.find("()") != std::string::npos) return 0;
    return static_cast<std::size_t>(std::count(signature.begin(), signature.end(), ',')) + 1;
}

class Parser {
public:
    Parser(std::string_view text, const ArrayOptions& opt) : s_(text), opt_(opt) {}

    PipelineValue parse() {
        auto v = expr();
        skip();
        if (pos_ != s_.size()) syntax("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) syntax(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    PipelineValue expr() {
        skip();
        if (pos_ >= s_.size()) syntax("unexpected end of expression", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ - start > 18) syntax("number too large", start);
            return static_cast<std::int64_t>(std::stoll(std::string(s_.substr(start, pos_ - start))));
        }
        if (c == '"') {
            const auto end = s_.find('"', pos_ + 1);
            if (end == std::string_view::npos) syntax("unterminated string", pos_);
            Symbol sym{std::string(s_.substr(pos_ + 1, end - pos_ - 1))};
            pos_ = end + 1;
            return sym;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const auto start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (!peek('(')) return Symbol{std::move(name)};
            ++pos_;
            Args args;
            if (!peek(')')) {
                args.push_back(expr());
                while (peek(',')) {
                    ++pos_;
                    args.push_back(expr());
                }
            }
            expect(')');
            return call(name, args, start);
        }
        syntax(std::string("unexpected character '") + c + "'", pos_);
    }

    PipelineValue call(const std::string& name, const Args& args, std::size_t at) {
        const auto& table = functions();
        const auto it = table.find(name);
        if (it == table.end()) syntax("unknown function '" + name + "'", at);
        const auto n = arity(it->second.signature);
        if (args.size() != n)
            syntax(name + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()), at);
        return it->second.call(args, opt_);
    }

    std::string_view s_;
    const ArrayOptions& opt_;
    std::size_t pos_ = 0;
};

}  // namespace

PipelineValue evaluate_pipeline(std::string_view expr, const ArrayOptions& options) {
    return Parser(expr, options).parse();
}

std::string pipeline_help() {
    std::string out = "expr := IDENT [ '(' [ expr { ',' expr } ] ')' ] | NUMBER | \"STRING\"\nfunctions:\n";
    for (const auto& [name, fn] : functions()) out += "  " + fn.signature + "\n";
    return out;
}

}  // namespace dfhad
