#include "domino/families.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace domino {

namespace {

void require_positive(std::initializer_list<int> values, const char* what) {
    for (int v : values)
        if (v < 1) throw std::invalid_argument(std::string(what) + " parameters must be positive");
}

} // namespace

Region centered_rows(const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("no rows");
    const int widest = *std::max_element(lengths.begin(), lengths.end());
    const int rows = int(lengths.size());
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r) {
        const int len = lengths[std::size_t(r)];
        if (len < 1 || (widest - len) % 2 != 0)
            throw std::invalid_argument("row " + std::to_string(r) + " cannot be centered");
        const int start = (widest - len) / 2;
        for (int x = 0; x < len; ++x) cells.push_back({start + x, rows - 1 - r});
    }
    return Region::from_cells(std::move(cells));
}

Region rectangle(int a, int b) {
    require_positive({a, b}, "rectangle");
    return centered_rows(std::vector<int>(std::size_t(a), b));
}

Region make_T(int i, int j, int p) {
    require_positive({i, j, p}, "T");
    std::vector<int> rows;
    for (int m = 0; m < p; ++m) rows.push_back(j + 2 * m);
    rows.insert(rows.end(), std::size_t(i - 1), j + 2 * (p - 1));
    return centered_rows(rows);
}

Region make_D(int i, int j, int p) {
    require_positive({i, j, p}, "D");
    std::vector<int> rows;
    for (int m = 0; m < p; ++m) rows.push_back(j + 2 * m);
    if (i >= 2) {
        rows.insert(rows.end(), std::size_t(i - 2), j + 2 * (p - 1));
        for (int m = p - 1; m >= 0; --m) rows.push_back(j + 2 * m);
    } else {
        for (int m = p - 2; m >= 0; --m) rows.push_back(j + 2 * m);
    }
    return centered_rows(rows);
}

Region aztec(int p) { return make_D(2, 2, p); }

FamilySpec FamilySpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "family spec needs ':' in '" + std::string(text) + "'");
    const auto name = text.substr(0, colon);
    FamilySpec f;
    std::size_t arity = 0;
    if (name == "rect" || name == "rectangle") {
        f.family = Family::Rectangle;
        arity = 2;
    } else if (name == "T") {
        f.family = Family::T;
        arity = 3;
    } else if (name == "D") {
        f.family = Family::D;
        arity = 3;
    } else if (name == "aztec") {
        f.family = Family::Aztec;
        arity = 1;
    } else {
        throw Error(ErrorCode::ParseError, "unknown family '" + std::string(name) + "'");
    }
    auto rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        const auto field = rest.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size() || v < 1)
            throw Error(ErrorCode::ParseError, "bad parameter '" + std::string(field) + "'");
        f.params.push_back(v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (f.params.size() != arity)
        throw Error(ErrorCode::ParseError, "'" + std::string(name) + "' takes " + std::to_string(arity) +
                                               " parameters");
    return f;
}

Region FamilySpec::build() const {
    const auto& q = params;
    switch (family) {
    case Family::Rectangle: return rectangle(q.at(0), q.at(1));
    case Family::T: return make_T(q.at(0), q.at(1), q.at(2));
    case Family::D: return make_D(q.at(0), q.at(1), q.at(2));
    case Family::Aztec: return aztec(q.at(0));
    }
    throw std::logic_error("unreachable family");
}

std::string to_string(const FamilySpec& f) {
    std::string out;
    switch (f.family) {
    case Family::Rectangle: out = "rect:"; break;
    case Family::T: out = "T:"; break;
    case Family::D: out = "D:"; break;
    case Family::Aztec: out = "aztec:"; break;
    }
    for (std::size_t n = 0; n < f.params.size(); ++n) {
        if (n) out += ',';
        out += std::to_string(f.params[n]);
    }
    return out;
}

} // namespace domino
