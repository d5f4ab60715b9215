#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace relhom::cli {

/// Display width in code points; every character used here is single-width.
inline std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

/// Fixed-width text table.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) {
        row.resize(header_.size());
        rows_.push_back(std::move(row));
    }
    [[nodiscard]] bool empty() const { return rows_.empty(); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> w(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) {
            w[c] = display_width(header_[c]);
            for (const auto& r : rows_) w[c] = std::max(w[c], display_width(r[c]));
        }
        auto line = [&](const std::vector<std::string>& r) {
            std::string out;
            for (std::size_t c = 0; c < r.size(); ++c) {
                out += r[c];
                if (c + 1 < r.size()) out += std::string(w[c] - display_width(r[c]) + 2, ' ');
            }
            os << out << '\n';
        };
        line(header_);
        std::vector<std::string> rule;
        for (auto n : w) {
            std::string s;
            for (std::size_t k = 0; k < n; ++k) s += "-";
            rule.push_back(s);
        }
        line(rule);
        for (const auto& r : rows_) line(r);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Output of one command: titled tables, free lines and a JSON record.
struct Output {
    std::vector<std::pair<std::string, Table>> tables;
    std::vector<std::string> lines;
    nlohmann::json report = nlohmann::json::object();
    int status = 0;

    Table& table(std::string title, std::vector<std::string> header) {
        tables.emplace_back(std::move(title), Table(std::move(header)));
        return tables.back().second;
    }
    void fail() { status = std::max(status, 2); }

    void print(std::ostream& os) const {
        bool first = true;
        for (const auto& [title, t] : tables) {
            if (!first) os << '\n';
            first = false;
            if (!title.empty()) os << title << '\n';
            t.print(os);
        }
        if (!lines.empty() && !tables.empty()) os << '\n';
        for (const auto& l : lines) os << l << '\n';
    }
};

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
    return out;
}

inline std::string braces(const std::vector<std::string>& v) { return "{" + join(v, ",") + "}"; }

}  // namespace relhom::cli
