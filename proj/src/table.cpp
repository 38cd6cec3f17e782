/*
   Copyright 2026 The hyperbms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hyperbms/table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace hbms {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T to_number(std::string_view tok, const char* what) {
    T v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'");
    return v;
}

}  // namespace

EvaluationPoint EvaluationPoint::from_exponents(const Field& field, std::int64_t e1, std::int64_t e2,
                                                TableShape shape) {
    EvaluationPoint pt;
    pt.alpha1_ = field.exp(e1);
    pt.alpha2_ = field.exp(e2);
    if (field.multiplicative_order(pt.alpha1_) != static_cast<std::uint32_t>(shape.r1))
        throw FieldError("a^" + std::to_string(e1) + " does not have order " + std::to_string(shape.r1));
    if (field.multiplicative_order(pt.alpha2_) != static_cast<std::uint32_t>(shape.r2))
        throw FieldError("a^" + std::to_string(e2) + " does not have order " + std::to_string(shape.r2));
    const std::int64_t n = field.unit_order();
    pt.e1_ = ((e1 % n) + n) % n;
    pt.e2_ = ((e2 % n) + n) % n;
    pt.shape_ = shape;
    return pt;
}

EvaluationPoint EvaluationPoint::standard(const Field& field, TableShape shape) {
    const auto n = field.unit_order();
    if (n % shape.r1 != 0 || n % shape.r2 != 0)
        throw FieldError("table shape needs roots of unity the field does not contain");
    return from_exponents(field, n / shape.r1, n / shape.r2, shape);
}

std::pair<Element, Element> EvaluationPoint::power(const IndexPair& n) const {
    const auto w = shape_.wrap(n);
    return {alpha1_.pow(w.n1), alpha2_.pow(w.n2)};
}

Element EvaluationPoint::monomial(const IndexPair& n, const IndexPair& m) const {
    const std::int64_t k1 = (static_cast<std::int64_t>(n.n1) * m.n1) % shape_.r1;
    const std::int64_t k2 = (static_cast<std::int64_t>(n.n2) * m.n2) % shape_.r2;
    return alpha1_.pow((k1 + shape_.r1) % shape_.r1) * alpha2_.pow((k2 + shape_.r2) % shape_.r2);
}

Element EvaluationPoint::evaluate(const Polynomial& f, const IndexPair& n) const {
    const auto [x1, x2] = power(n);
    return f.evaluate(x1, x2);
}

IncompleteTable parse_table(std::string_view text, const TableOverrides& overrides) {
    std::optional<std::uint32_t> p, m;
    std::uint32_t e = 1;
    std::string modulus_text;
    std::optional<TableShape> shape;
    std::optional<std::pair<std::int64_t, std::int64_t>> alpha;
    std::vector<std::vector<std::string_view>> rows;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!rows.empty()) throw ParseError("line " + std::to_string(line_no) + ": comment after table data");
            auto toks = split_ws(line.substr(1));
            if (toks.empty()) continue;
            if (toks[0] == "field") {
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    const auto eq = toks[i].find('=');
                    if (eq == std::string_view::npos) throw ParseError("bad field key '" + std::string(toks[i]) + "'");
                    const auto key = toks[i].substr(0, eq);
                    const auto val = toks[i].substr(eq + 1);
                    if (key == "p")
                        p = to_number<std::uint32_t>(val, "characteristic");
                    else if (key == "m")
                        m = to_number<std::uint32_t>(val, "degree");
                    else if (key == "e")
                        e = to_number<std::uint32_t>(val, "base exponent");
                    else if (key == "modulus")
                        modulus_text = std::string(val);
                    else
                        throw ParseError("unknown field key '" + std::string(key) + "'");
                }
            } else if (toks[0] == "shape") {
                if (toks.size() != 3) throw ParseError("shape needs two integers");
                shape = TableShape{to_number<int>(toks[1], "shape"), to_number<int>(toks[2], "shape")};
                if (shape->r1 < 1 || shape->r2 < 1) throw ParseError("shape must be positive");
            } else if (toks[0] == "alpha") {
                if (toks.size() != 3) throw ParseError("alpha needs two exponents");
                alpha = std::pair{to_number<std::int64_t>(toks[1], "alpha exponent"),
                                  to_number<std::int64_t>(toks[2], "alpha exponent")};
            }
            continue;
        }
        rows.push_back(split_ws(line));
    }

    if (!p || !m) throw ParseError("missing '# field p=<p> m=<m>' header");
    if (!shape) throw ParseError("missing '# shape <r1> <r2>' header");
    if (*m % e != 0) throw ParseError("degree m must be a multiple of the base exponent e");

    FieldSpec spec;
    spec.p = *p;
    spec.base_exponent = e;
    spec.extension_degree = *m / e;
    if (overrides.modulus) modulus_text = *overrides.modulus;
    if (overrides.alpha1_exp || overrides.alpha2_exp) {
        if (!alpha && !(overrides.alpha1_exp && overrides.alpha2_exp))
            throw ParseError("both alpha exponents are needed when the table has no '# alpha' line");
        if (!alpha) alpha = std::pair<std::int64_t, std::int64_t>{0, 0};
        if (overrides.alpha1_exp) alpha->first = *overrides.alpha1_exp;
        if (overrides.alpha2_exp) alpha->second = *overrides.alpha2_exp;
    }
    if (!modulus_text.empty()) spec.modulus = gfp::parse_modulus(modulus_text, *p);

    IncompleteTable table;
    table.field = Field::create(spec);
    table.cells = CellGrid(*shape);
    if (alpha) {
        table.point = EvaluationPoint::from_exponents(*table.field, alpha->first, alpha->second, *shape);
        table.explicit_alpha = true;
    } else {
        table.point = EvaluationPoint::standard(*table.field, *shape);
    }

    if (rows.size() != static_cast<std::size_t>(shape->r1))
        throw ParseError("expected " + std::to_string(shape->r1) + " rows, found " + std::to_string(rows.size()));
    for (int i = 0; i < shape->r1; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (row.size() != static_cast<std::size_t>(shape->r2))
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(shape->r2));
        for (int j = 0; j < shape->r2; ++j) {
            const auto tok = row[static_cast<std::size_t>(j)];
            if (tok == "*") continue;
            table.cells.set({i, j}, table.field->parse(tok));
        }
    }
    return table;
}

std::string format_table(const IncompleteTable& table) {
    const auto& f = *table.field;
    const auto& spec = f.spec();
    std::ostringstream out;
    out << "# field p=" << spec.p << " m=" << spec.degree();
    if (spec.base_exponent != 1) out << " e=" << spec.base_exponent;
    out << " modulus=" << gfp::format_modulus(spec.modulus, spec.p) << "\n";
    out << "# shape " << table.shape().r1 << " " << table.shape().r2 << "\n";
    if (table.explicit_alpha) out << "# alpha " << table.point.exponent1() << " " << table.point.exponent2() << "\n";

    std::vector<std::string> tokens;
    std::size_t width = 1;
    for (int i = 0; i < table.shape().r1; ++i)
        for (int j = 0; j < table.shape().r2; ++j) {
            const auto& c = table.cells.at({i, j});
            tokens.push_back(c ? f.format(*c) : "*");
            width = std::max(width, tokens.back().size());
        }
    std::size_t k = 0;
    for (int i = 0; i < table.shape().r1; ++i) {
        for (int j = 0; j < table.shape().r2; ++j, ++k) {
            if (j > 0) out << std::string(width + 1 - tokens[k].size(), ' ');
            out << tokens[k];
        }
        out << "\n";
    }
    return out.str();
}

int max_hyperbolic_t(const IncompleteTable& table, const IndexPair& tau) {
    const auto& shape = table.shape();
    int best = 0;
    for (int t = 1; t <= shape.r1 / 2 && t <= shape.r2 / 2; ++t) {
        std::vector<IndexPair> window;
        try {
            window = hyperbolic_set(2 * t + 1, shape);
        } catch (const DoesNotFit&) {
            break;
        }
        const bool covered = std::all_of(window.begin(), window.end(),
                                         [&](const IndexPair& n) { return table.cells.known(tau + n); });
        if (!covered) break;
        best = t;
    }
    return best;
}

DetectionResult detect_hyperbolic(const IncompleteTable& table) {
    DetectionResult result;
    int best = 0;
    for (int i = 0; i < table.shape().r1; ++i)
        for (int j = 0; j < table.shape().r2; ++j) {
            const int t = max_hyperbolic_t(table, {i, j});
            if (t == 0 || t < best) continue;
            if (t > best) {
                best = t;
                result.candidates.clear();
            }
            result.candidates.push_back({{i, j}, t});
        }
    return result;
}

WorkingArray extract_working(const IncompleteTable& table, const IndexPair& tau) {
    WorkingArray u{CellGrid(table.shape()), table.shape().wrap(tau)};
    for (int i = 0; i < table.shape().r1; ++i)
        for (int j = 0; j < table.shape().r2; ++j) u.cells.set({i, j}, table.cells.at(u.tau + IndexPair{i, j}));
    return u;
}

IncompleteTable complete_table(const IncompleteTable& table, const Polynomial& e_prime, const IndexPair& tau,
                               const EvaluationPoint& point) {
    IncompleteTable out = table;
    for (const auto& n : table.cells.unknown_cells()) out.cells.set(n, point.evaluate(e_prime, n - tau));
    return out;
}

}  // namespace hbms
