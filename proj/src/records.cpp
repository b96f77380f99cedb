#include "records.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rational.hpp"

namespace records {

using exact::Rat;
using exact::ValidationError;

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

splice::FramingFraction parse_framing(const std::string& text) {
    Rat x = exact::parse_rational(text);
    return splice::FramingFraction(numerator(x), denominator(x));
}

void finish_block(std::vector<NamedRecord>& out, std::set<std::string>& names,
                  NamedRecord& cur, bool& has_name, int line_no) {
    if (!has_name) {
        throw ValidationError("record block ending at line " + std::to_string(line_no) +
                              " has no name");
    }
    if (!names.insert(cur.name).second)
        throw ValidationError("duplicate record name '" + cur.name + "'");
    out.push_back(cur);
    cur = NamedRecord{};
    has_name = false;
}

}  // namespace

std::vector<NamedRecord> parse_records(std::istream& in) {
    std::vector<NamedRecord> out;
    std::set<std::string> names;
    NamedRecord cur;
    bool has_name = false;
    bool in_block = false;
    std::set<std::string> seen_keys;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (!t.empty() && t[0] == '#') continue;
        if (t.empty()) {
            if (in_block) {
                finish_block(out, names, cur, has_name, line_no);
                seen_keys.clear();
                in_block = false;
            }
            continue;
        }
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected `key: value`");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (value.empty())
            throw ValidationError("line " + std::to_string(line_no) + ": empty value for '" +
                                  key + "'");
        if (!seen_keys.insert(key).second)
            throw ValidationError("line " + std::to_string(line_no) + ": repeated key '" +
                                  key + "'");
        in_block = true;

        if (key == "name") {
            cur.name = value;
            has_name = true;
        } else if (key == "lambda_w") {
            cur.data.ambient_lambda_w = exact::parse_rational(value);
        } else if (key == "lambda2") {
            cur.data.ambient_lambda2 = exact::parse_rational(value);
        } else if (key == "a2") {
            cur.data.a2 = exact::parse_rational(value);
        } else if (key == "a4") {
            cur.data.a4 = exact::parse_rational(value);
        } else if (key == "v") {
            cur.data.v_coeff = exact::parse_rational(value);
        } else if (key == "framing") {
            cur.data.framing = parse_framing(value);
        } else {
            throw ValidationError("line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
        }
    }
    if (in_block) finish_block(out, names, cur, has_name, line_no);
    return out;
}

std::vector<NamedRecord> parse_records_text(const std::string& text) {
    std::istringstream in(text);
    return parse_records(in);
}

std::vector<NamedRecord> load_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open record file '" + path + "'");
    return parse_records(in);
}

const splice::KnotRecord& find_record(const std::vector<NamedRecord>& list,
                                      const std::string& name) {
    for (const auto& r : list)
        if (r.name == name) return r.data;
    throw ValidationError("no record named '" + name + "'");
}

}  // namespace records
