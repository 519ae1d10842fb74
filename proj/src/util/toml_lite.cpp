// Copyright 2026 The Annealer Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alab/util/toml_lite.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace alab::util {

namespace {

class Parser {
   public:
    explicit Parser(const std::string &text) : text_(text) {
    }

    TomlDocument run() {
        TomlDocument doc;
        doc.tables[""];
        std::string table;
        while (true) {
            skip_blank_lines();
            if (at_end()) {
                break;
            }
            if (peek() == '[') {
                ++pos_;
                skip_spaces();
                table = bare_key();
                skip_spaces();
                expect(']');
                if (doc.tables.count(table) && table != "") {
                    fail("duplicate table [" + table + "]");
                }
                doc.tables[table];
                end_of_line();
                continue;
            }
            std::string key = peek() == '"' ? quoted() : bare_key();
            skip_spaces();
            expect('=');
            skip_spaces();
            TomlValue v = value(true);
            auto &t = doc.tables[table];
            if (t.count(key)) {
                fail("duplicate key '" + key + "'");
            }
            t.emplace(key, std::move(v));
            end_of_line();
        }
        return doc;
    }

   private:
    bool at_end() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return at_end() ? '\0' : text_[pos_];
    }

    [[noreturn]] void fail(const std::string &msg) const {
        int line = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            line += text_[i] == '\n';
        }
        throw std::invalid_argument("toml line " + std::to_string(line) + ": " + msg);
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_spaces() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
            ++pos_;
        }
    }

    void skip_comment() {
        if (peek() == '#') {
            while (!at_end() && peek() != '\n') {
                ++pos_;
            }
        }
    }

    void skip_blank_lines() {
        while (!at_end()) {
            skip_spaces();
            skip_comment();
            if (peek() == '\n' || peek() == '\r') {
                ++pos_;
            } else {
                return;
            }
        }
    }

    void end_of_line() {
        skip_spaces();
        skip_comment();
        if (peek() == '\r') {
            ++pos_;
        }
        if (!at_end() && peek() != '\n') {
            fail("trailing characters");
        }
    }

    std::string bare_key() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected key");
        }
        return text_.substr(start, pos_ - start);
    }

    std::string quoted() {
        expect('"');
        std::string out;
        while (!at_end() && peek() != '"') {
            char c = text_[pos_++];
            if (c == '\n') {
                fail("unterminated string");
            }
            if (c == '\\') {
                char e = text_[pos_++];
                switch (e) {
                    case 'n':
                        out += '\n';
                        break;
                    case 't':
                        out += '\t';
                        break;
                    case '"':
                    case '\\':
                        out += e;
                        break;
                    default:
                        fail("unsupported escape");
                }
            } else {
                out += c;
            }
        }
        expect('"');
        return out;
    }

    TomlValue value(bool allow_array) {
        char c = peek();
        if (c == '"') {
            return {quoted()};
        }
        if (c == '[') {
            if (!allow_array) {
                fail("nested arrays are not supported");
            }
            ++pos_;
            TomlValue::Array items;
            while (true) {
                skip_blank_lines();
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                items.push_back(value(false));
                skip_blank_lines();
                if (peek() == ',') {
                    ++pos_;
                } else if (peek() != ']') {
                    fail("expected ',' or ']' in array");
                }
            }
            return {std::move(items)};
        }
        std::size_t start = pos_;
        while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ',' && peek() != ']' &&
               peek() != '#') {
            ++pos_;
        }
        std::string token = text_.substr(start, pos_ - start);
        if (token == "true") {
            return {true};
        }
        if (token == "false") {
            return {false};
        }
        std::string digits;
        for (char ch : token) {
            if (ch != '_') {
                digits += ch;
            }
        }
        try {
            std::size_t used = 0;
            double v = std::stod(digits, &used);
            if (used == digits.size() && !digits.empty()) {
                return {v};
            }
        } catch (const std::exception &) {
        }
        fail("unsupported value '" + token + "'");
    }

    const std::string &text_;
    std::size_t pos_ = 0;
};

}  // namespace

TomlDocument TomlDocument::parse(const std::string &text) {
    return Parser(text).run();
}

TomlDocument TomlDocument::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool TomlDocument::has_table(const std::string &table) const {
    return tables.count(table) > 0;
}

const TomlValue *TomlDocument::find(const std::string &table, const std::string &key) const {
    auto t = tables.find(table);
    if (t == tables.end()) {
        return nullptr;
    }
    auto v = t->second.find(key);
    return v == t->second.end() ? nullptr : &v->second;
}

namespace {
std::string where(const std::string &table, const std::string &key) {
    return table.empty() ? key : table + "." + key;
}
}  // namespace

std::optional<std::string> TomlDocument::get_string(const std::string &table, const std::string &key) const {
    const TomlValue *v = find(table, key);
    if (!v) {
        return std::nullopt;
    }
    if (!v->is_string()) {
        throw std::invalid_argument("config: " + where(table, key) + " must be a string");
    }
    return std::get<std::string>(v->value);
}

std::optional<double> TomlDocument::get_number(const std::string &table, const std::string &key) const {
    const TomlValue *v = find(table, key);
    if (!v) {
        return std::nullopt;
    }
    if (!v->is_number()) {
        throw std::invalid_argument("config: " + where(table, key) + " must be a number");
    }
    return std::get<double>(v->value);
}

std::optional<bool> TomlDocument::get_bool(const std::string &table, const std::string &key) const {
    const TomlValue *v = find(table, key);
    if (!v) {
        return std::nullopt;
    }
    if (!v->is_bool()) {
        throw std::invalid_argument("config: " + where(table, key) + " must be a boolean");
    }
    return std::get<bool>(v->value);
}

std::optional<std::vector<double>> TomlDocument::get_numbers(const std::string &table, const std::string &key) const {
    const TomlValue *v = find(table, key);
    if (!v) {
        return std::nullopt;
    }
    if (!v->is_array()) {
        throw std::invalid_argument("config: " + where(table, key) + " must be an array");
    }
    std::vector<double> out;
    for (const auto &item : std::get<TomlValue::Array>(v->value)) {
        if (!item.is_number()) {
            throw std::invalid_argument("config: " + where(table, key) + " must contain numbers");
        }
        out.push_back(std::get<double>(item.value));
    }
    return out;
}

std::optional<std::vector<std::string>> TomlDocument::get_strings(const std::string &table,
                                                                  const std::string &key) const {
    const TomlValue *v = find(table, key);
    if (!v) {
        return std::nullopt;
    }
    if (!v->is_array()) {
        throw std::invalid_argument("config: " + where(table, key) + " must be an array");
    }
    std::vector<std::string> out;
    for (const auto &item : std::get<TomlValue::Array>(v->value)) {
        if (!item.is_string()) {
            throw std::invalid_argument("config: " + where(table, key) + " must contain strings");
        }
        out.push_back(std::get<std::string>(item.value));
    }
    return out;
}

}  // namespace alab::util
