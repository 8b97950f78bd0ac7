#include "dfhad/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dfhad/error.hpp"

namespace dfhad {

namespace {

using nlohmann::json;

json residues(const GroupSpec& g, const Subset& s) {
    json out = json::array();
    for (auto x : s.members()) out.push_back(g.element(x).residues);
    return out;
}

std::string dump(const GroupSpec& g, const std::vector<const Subset*>& blocks, const std::optional<std::string>& kind,
                 const std::map<std::string, bool>& conditions) {
    json doc;
    doc["group"] = g.factors();
    doc["blocks"] = json::array();
    for (const auto* b : blocks) doc["blocks"].push_back(residues(g, *b));
    if (kind) doc["kind"] = *kind;
    if (!conditions.empty()) doc["conditions"] = conditions;
    return doc.dump() + "\n";
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

std::string to_json(const DifferenceFamily& f, const std::map<std::string, bool>& conditions) {
    std::vector<const Subset*> blocks;
    for (const auto& b : f.blocks()) blocks.push_back(&b);
    std::optional<std::string> kind;
    if (!f.kinds().empty()) kind = std::string(to_string(f.kinds().front()));
    return dump(f.group(), blocks, kind, conditions);
}

std::string to_json(const BuildingFamily& b, const std::map<std::string, bool>& conditions) {
    std::vector<const Subset*> parts;
    for (const auto& p : b.parts()) parts.push_back(&p);
    return dump(b.group(), parts, "building", conditions);
}

FamilyDocument parse_family_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("group") || !doc.contains("blocks"))
        parse_error("family document needs \"group\" and \"blocks\"");
    const auto has_float = [](const json& j, const auto& self) -> bool {
        if (j.is_number_float()) return true;
        if (j.is_array() || j.is_object())
            for (const auto& c : j)
                if (self(c, self)) return true;
        return false;
    };
    if (has_float(doc, has_float)) parse_error("family documents contain no floating-point numbers");

    std::vector<int> factors;
    std::vector<std::vector<std::vector<int>>> raw;
    std::optional<std::string> kind;
    std::map<std::string, bool> conditions;
    try {
        factors = doc.at("group").get<std::vector<int>>();
        raw = doc.at("blocks").get<std::vector<std::vector<std::vector<int>>>>();
        if (doc.contains("kind")) kind = doc.at("kind").get<std::string>();
        if (doc.contains("conditions")) conditions = doc.at("conditions").get<std::map<std::string, bool>>();
    } catch (const json::exception& e) {
        parse_error(std::string("malformed family document: ") + e.what());
    }
    for (const auto& [name, _] : conditions)
        if (!parse_condition(name)) parse_error("unknown condition '" + name + "'");
    if (kind && *kind != "building" && !parse_kind(*kind)) parse_error("unknown kind '" + *kind + "'");

    const auto g = make_group(factors);
    std::vector<Subset> blocks;
    for (const auto& blk : raw) {
        std::vector<ElementIndex> members;
        for (const auto& r : blk) {
            if (r.size() != factors.size()) parse_error("residue vector of wrong length");
            for (std::size_t j = 0; j < r.size(); ++j)
                if (r[j] < 0 || r[j] >= factors[j]) parse_error("residue out of range");
            members.push_back(g.index_of(GroupElement{r}));
        }
        blocks.emplace_back(g, std::move(members));
    }

    if (kind == "building") {
        if (blocks.size() != 8) parse_error("a building family has eight parts");
        std::array<Subset, 8> parts;
        std::move(blocks.begin(), blocks.end(), parts.begin());
        return {BuildingFamily(g, std::move(parts)), kind, std::move(conditions)};
    }
    return {DifferenceFamily(g, std::move(blocks)), kind, std::move(conditions)};
}

std::string matrix_to_text(const SignMatrix& m) {
    std::string out = std::to_string(m.order()) + "\n";
    out.reserve(out.size() + m.order() * (m.order() + 1));
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) out.push_back(m.at(i, j) > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

SignMatrix matrix_from_text(std::string_view text) {
    std::size_t pos = 0;
    const auto next_line = [&]() -> std::optional<std::string_view> {
        if (pos >= text.size()) return std::nullopt;
        const auto end = text.find('\n', pos);
        if (end == std::string_view::npos) parse_error("missing trailing newline");
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        return line;
    };
    const auto header = next_line();
    if (!header || header->empty() || header->find_first_not_of("0123456789") != std::string_view::npos)
        parse_error("first line must be the decimal order");
    const std::size_t n = std::stoull(std::string(*header));
    SignMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto line = next_line();
        if (!line) parse_error("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
        if (line->size() != n) parse_error("row " + std::to_string(i) + " has " + std::to_string(line->size()) +
                                           " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const char c = (*line)[j];
            if (c == '-')
                m.set(i, j, -1);
            else if (c != '+')
                parse_error("row " + std::to_string(i) + ": unexpected character");
        }
    }
    if (pos != text.size()) parse_error("trailing data after the last row");
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << contents;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace dfhad
