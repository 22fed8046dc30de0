#include "vacuumprobe/config.hpp"

#include "vacuumprobe/report_io.hpp"

#include <cctype>
#include <charconv>

namespace vacuumprobe::config {

namespace {

struct TomlCursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError("toml parse error (line " + std::to_string(line) + "): " + msg);
    }
};

void skip_inline_ws(TomlCursor& c) {
    while (c.pos < c.text.size() && (c.text[c.pos] == ' ' || c.text[c.pos] == '\t')) ++c.pos;
}

void skip_ws_and_comments(TomlCursor& c) {
    while (c.pos < c.text.size()) {
        const char ch = c.text[c.pos];
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++c.pos;
        } else if (ch == '\n') {
            ++c.pos;
            ++c.line;
        } else if (ch == '#') {
            while (c.pos < c.text.size() && c.text[c.pos] != '\n') ++c.pos;
        } else {
            break;
        }
    }
}

bool bare_key_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
}

std::string parse_bare_key(TomlCursor& c) {
    const std::size_t start = c.pos;
    while (c.pos < c.text.size() && bare_key_char(c.text[c.pos])) ++c.pos;
    if (c.pos == start) c.fail("expected key");
    return c.text.substr(start, c.pos - start);
}

std::string parse_string(TomlCursor& c) {
    if (c.text[c.pos] != '"') c.fail("expected '\"'");
    ++c.pos;
    std::string out;
    while (c.pos < c.text.size()) {
        char ch = c.text[c.pos++];
        if (ch == '"') return out;
        if (ch == '\n') c.fail("unterminated string");
        if (ch == '\\') {
            if (c.pos >= c.text.size()) c.fail("dangling escape");
            const char esc = c.text[c.pos++];
            switch (esc) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                default: c.fail("unsupported escape");
            }
        } else {
            out += ch;
        }
    }
    c.fail("unterminated string");
}

nlohmann::json parse_value(TomlCursor& c);

nlohmann::json parse_array(TomlCursor& c) {
    ++c.pos; // '['
    nlohmann::json arr = nlohmann::json::array();
    for (;;) {
        skip_ws_and_comments(c);
        if (c.pos >= c.text.size()) c.fail("unterminated array");
        if (c.text[c.pos] == ']') {
            ++c.pos;
            return arr;
        }
        arr.push_back(parse_value(c));
        skip_ws_and_comments(c);
        if (c.pos < c.text.size() && c.text[c.pos] == ',') {
            ++c.pos;
        } else if (c.pos < c.text.size() && c.text[c.pos] == ']') {
            ++c.pos;
            return arr;
        } else {
            c.fail("expected ',' or ']' in array");
        }
    }
}

nlohmann::json parse_number_or_literal(TomlCursor& c) {
    const std::size_t start = c.pos;
    while (c.pos < c.text.size()) {
        const char ch = c.text[c.pos];
        if (bare_key_char(ch) || ch == '+' || ch == '.') ++c.pos;
        else break;
    }
    const std::string tok = c.text.substr(start, c.pos - start);
    if (tok.empty()) c.fail("expected value");
    if (tok == "true") return true;
    if (tok == "false") return false;

    const bool looks_float = tok.find_first_of(".eE") != std::string::npos ||
                             tok == "inf" || tok == "-inf" || tok == "nan";
    if (!looks_float) {
        long long iv = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), iv);
        if (res.ec == std::errc() && res.ptr == tok.data() + tok.size())
            return iv;
    }
    double dv = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), dv);
    if (res.ec == std::errc() && res.ptr == tok.data() + tok.size())
        return dv;
    c.fail("cannot parse value '" + tok + "'");
}

nlohmann::json parse_value(TomlCursor& c) {
    skip_inline_ws(c);
    if (c.pos >= c.text.size()) c.fail("expected value");
    const char ch = c.text[c.pos];
    if (ch == '"') return parse_string(c);
    if (ch == '[') return parse_array(c);
    return parse_number_or_literal(c);
}

nlohmann::json* descend(nlohmann::json& root, const std::vector<std::string>& keys) {
    nlohmann::json* node = &root;
    for (const auto& k : keys) {
        if (!node->contains(k)) (*node)[k] = nlohmann::json::object();
        node = &(*node)[k];
    }
    return node;
}

} // namespace

nlohmann::json parse_toml(const std::string& text) {
    nlohmann::json root = nlohmann::json::object();
    TomlCursor c{text};
    std::vector<std::string> table;

    for (;;) {
        skip_ws_and_comments(c);
        if (c.pos >= c.text.size()) break;
        if (c.text[c.pos] == '[') {
            ++c.pos;
            table.clear();
            skip_inline_ws(c);
            table.push_back(parse_bare_key(c));
            skip_inline_ws(c);
            while (c.pos < c.text.size() && c.text[c.pos] == '.') {
                ++c.pos;
                skip_inline_ws(c);
                table.push_back(parse_bare_key(c));
                skip_inline_ws(c);
            }
            if (c.pos >= c.text.size() || c.text[c.pos] != ']') c.fail("expected ']'");
            ++c.pos;
            descend(root, table);
            continue;
        }
        const std::string key = parse_bare_key(c);
        skip_inline_ws(c);
        if (c.pos >= c.text.size() || c.text[c.pos] != '=') c.fail("expected '=' after key");
        ++c.pos;
        nlohmann::json value = parse_value(c);
        nlohmann::json* node = descend(root, table);
        (*node)[key] = std::move(value);
    }
    return root;
}

nlohmann::json load_config_file(const std::filesystem::path& path) {
    const std::string text = io::read_text_file(path);
    if (path.extension() == ".json") {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw ValidationError("invalid JSON config: " + path.string());
        return j;
    }
    return parse_toml(text);
}

const nlohmann::json* find_path(const nlohmann::json& root, const std::string& path) {
    const nlohmann::json* node = &root;
    std::size_t start = 0;
    while (start <= path.size()) {
        const std::size_t dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
        if (!node->is_object() || !node->contains(key))
            return nullptr;
        node = &(*node)[key];
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return node;
}

double require_number(const nlohmann::json& node, const std::string& path) {
    const nlohmann::json* v = find_path(node, path);
    if (!v || !v->is_number())
        throw ValidationError("missing or non-numeric config field: " + path);
    return v->get<double>();
}

double number_or(const nlohmann::json& node, const std::string& path, double fallback) {
    const nlohmann::json* v = find_path(node, path);
    if (!v) return fallback;
    if (!v->is_number())
        throw ValidationError("non-numeric config field: " + path);
    return v->get<double>();
}

std::string require_string(const nlohmann::json& node, const std::string& path) {
    const nlohmann::json* v = find_path(node, path);
    if (!v || !v->is_string())
        throw ValidationError("missing or non-string config field: " + path);
    return v->get<std::string>();
}

std::string string_or(const nlohmann::json& node, const std::string& path,
                      const std::string& fallback) {
    const nlohmann::json* v = find_path(node, path);
    if (!v) return fallback;
    if (!v->is_string())
        throw ValidationError("non-string config field: " + path);
    return v->get<std::string>();
}

bool bool_or(const nlohmann::json& node, const std::string& path, bool fallback) {
    const nlohmann::json* v = find_path(node, path);
    if (!v) return fallback;
    if (!v->is_boolean())
        throw ValidationError("non-boolean config field: " + path);
    return v->get<bool>();
}

int int_or(const nlohmann::json& node, const std::string& path, int fallback) {
    const nlohmann::json* v = find_path(node, path);
    if (!v) return fallback;
    if (!v->is_number_integer())
        throw ValidationError("non-integer config field: " + path);
    return v->get<int>();
}

std::vector<double> require_number_list(const nlohmann::json& node, const std::string& path) {
    const nlohmann::json* v = find_path(node, path);
    if (!v || !v->is_array() || v->empty())
        throw ValidationError("missing or empty numeric list: " + path);
    std::vector<double> out;
    for (const auto& e : *v) {
        if (!e.is_number())
            throw ValidationError("non-numeric entry in list: " + path);
        out.push_back(e.get<double>());
    }
    return out;
}

} // namespace vacuumprobe::config
