#pragma once

// Space specifications accepted by the command line:
//   family form:  "SU(2n)/Sp(n)(n=3)"  or a concrete alias  "SU(6)/Sp(3)"
//   generic form: "g=B4; cat=1; torus=0; summands=[(D3,[2,1,0]),(B1,[4])]"

#include "embedding.hpp"
#include "errors.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace ghs {

struct ParsedSpace {
    SpaceDescriptor space;
    const CatalogFamily* family = nullptr;  // set for family-form input
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!isspace(static_cast<unsigned char>(ch)))
            out += ch;
    return out;
}

inline ParsedSpace parse_generic_form(const std::string& raw) {
    std::string s = strip_spaces(raw);
    SpaceDescriptor d;
    bool have_g = false, have_cat = false;
    size_t i = 0;
    auto fail = [&](const std::string& why) { throw ParseError(why + " near position " +
                                                               std::to_string(i) + " in '" +
                                                               raw + "'", i); };
    while (i < s.size()) {
        size_t eq = s.find('=', i);
        if (eq == std::string::npos)
            fail("expected key=value");
        std::string key = s.substr(i, eq - i);
        i = eq + 1;
        if (key == "summands") {
            if (i >= s.size() || s[i] != '[')
                fail("expected '['");
            ++i;
            while (i < s.size() && s[i] != ']') {
                if (s[i] != '(')
                    fail("expected '('");
                ++i;
                size_t comma = s.find(',', i);
                if (comma == std::string::npos)
                    fail("expected ','");
                SummandSpec sum;
                sum.type = parse_simple_type(s.substr(i, comma - i));
                i = comma + 1;
                if (i >= s.size() || s[i] != '[')
                    fail("expected index list");
                ++i;
                while (i < s.size() && s[i] != ']') {
                    size_t start = i;
                    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                        ++i;
                    if (start == i)
                        fail("expected index");
                    sum.basis_indices.push_back(std::stoi(s.substr(start, i - start)));
                    if (i < s.size() && s[i] == ',')
                        ++i;
                }
                if (i >= s.size())
                    fail("unterminated index list");
                ++i;  // ']'
                if (i >= s.size() || s[i] != ')')
                    fail("expected ')'");
                ++i;
                if (i < s.size() && s[i] == ',')
                    ++i;
                d.summands.push_back(std::move(sum));
            }
            if (i >= s.size())
                fail("unterminated summand list");
            ++i;  // ']'
        } else {
            size_t end = s.find(';', i);
            if (end == std::string::npos)
                end = s.size();
            std::string value = s.substr(i, end - i);
            i = end;
            if (key == "g") {
                d.ambient = parse_simple_type(value);
                have_g = true;
            } else if (key == "cat") {
                d.category = std::stoi(value);
                have_cat = true;
            } else if (key == "torus") {
                d.torus_rank = std::stoi(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        }
        if (i < s.size()) {
            if (s[i] != ';')
                fail("expected ';'");
            ++i;
        }
    }
    if (!have_g)
        throw ParseError("generic form needs g=<type>", 0);
    if (!have_cat)
        d.category = 1;
    d.name = strip_spaces(raw);
    return {d, nullptr};
}

}  // namespace detail

inline std::string render_generic(const SpaceDescriptor& d) {
    std::string out = "g=" + to_string(d.ambient) + "; cat=" + std::to_string(d.category) +
                      "; torus=" + std::to_string(d.torus_rank) + "; summands=[";
    for (size_t k = 0; k < d.summands.size(); ++k) {
        if (k)
            out += ",";
        out += "(" + to_string(d.summands[k].type) + ",[";
        for (size_t j = 0; j < d.summands[k].basis_indices.size(); ++j) {
            if (j)
                out += ",";
            out += std::to_string(d.summands[k].basis_indices[j]);
        }
        out += "])";
    }
    return out + "]";
}

inline ParsedSpace parse_space_spec(const std::string& raw) {
    std::string s = detail::strip_spaces(raw);
    if (s.empty())
        throw ParseError("empty space spec", 0);
    if (s.rfind("g=", 0) == 0)
        return detail::parse_generic_form(raw);

    static const std::vector<CatalogFamily> fams = catalog();

    // optional trailing parameter group "(n=..,k=..)"
    std::optional<int> n, k;
    std::string name = s;
    size_t open = s.rfind('(');
    if (open != std::string::npos && s.back() == ')' &&
        s.find('=', open) != std::string::npos) {
        std::string params = s.substr(open + 1, s.size() - open - 2);
        name = s.substr(0, open);
        size_t i = 0;
        while (i < params.size()) {
            size_t eq = params.find('=', i);
            if (eq == std::string::npos)
                throw ParseError("bad parameter group in '" + raw + "'", open + i);
            std::string key = params.substr(i, eq - i);
            size_t end = params.find(',', eq);
            if (end == std::string::npos)
                end = params.size();
            int value = std::stoi(params.substr(eq + 1, end - eq - 1));
            if (key == "n")
                n = value;
            else if (key == "k")
                k = value;
            else
                throw ParseError("unknown parameter '" + key + "'", open + i);
            i = end + (end < params.size() ? 1 : 0);
        }
    }

    for (auto& f : fams) {
        if (detail::strip_spaces(f.name) != name)
            continue;
        if (f.nparams == 0) {
            ParsedSpace p{f.make(0, 0), &f};
            p.space.name = f.display(0, 0);
            return p;
        }
        if (!n || (f.nparams == 2 && !k))
            throw ParseError("family '" + f.name + "' needs parameters", 0);
        int kk = k.value_or(1);
        if (!f.valid(*n, kk))
            throw ParseError("parameters outside the admissible range for '" + f.name + "'",
                             0);
        ParsedSpace p{f.make(*n, kk), &f};
        p.space.name = f.display(*n, kk);
        return p;
    }

    // concrete alias like "SU(6)/Sp(3)": search small parameter ranges
    for (auto& f : fams) {
        for (int nn = 1; nn <= 40; ++nn) {
            int kmax = (f.nparams == 2) ? nn : 1;
            if (f.nparams == 0)
                kmax = 1;
            for (int kk = 1; kk <= kmax; ++kk) {
                if (f.nparams != 0 && !f.valid(nn, kk))
                    continue;
                if (detail::strip_spaces(f.display(nn, kk)) == s) {
                    ParsedSpace p{f.make(nn, kk), &f};
                    p.space.name = f.display(nn, kk);
                    return p;
                }
            }
            if (f.nparams == 0)
                break;
        }
    }
    throw ParseError("unrecognized space '" + raw + "'", 0);
}

}  // namespace ghs
