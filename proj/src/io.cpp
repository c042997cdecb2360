#include "semidet/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "semidet/poset.hpp"
#include "semidet/star_algebra.hpp"

namespace semidet {

  namespace {

    struct Token {
      std::string text;
      std::size_t col;  // 1-based
    };

    std::vector<Token> tokenize(std::string const& line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t'
               && line[j] != '\r') {
          ++j;
        }
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
      }
      return out;
    }

    bool valid_name(std::string const& s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')
                  || (c >= '0' && c <= '9') || c == '_';
        if (!ok) {
          return false;
        }
      }
      return true;
    }

    // Splits "<label>: rest"; the label must be followed directly by ':'.
    std::pair<Token, std::vector<Token>> split_label(std::string const& line,
                                                     std::size_t        lineno) {
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw ParseError(lineno, 1, "expected '<name>:'");
      }
      auto head = tokenize(line.substr(0, colon));
      if (head.size() != 1) {
        throw ParseError(lineno, head.empty() ? 1 : head[1].col,
                         "expected a single label before ':'");
      }
      auto rest = tokenize(line.substr(colon + 1));
      for (auto& t : rest) {
        t.col += colon + 1;
      }
      return {head[0], rest};
    }

    std::string rational_str(Rational const& q) {
      return q.get_str();
    }

  }  // namespace

  FiniteSemigroup parse_semigroup(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    std::size_t        lineno = 0;

    std::vector<std::string>           names;
    std::map<std::string, ElementId>   index;
    std::vector<std::vector<Token>>    rows;
    std::vector<std::size_t>           row_line;
    std::vector<char>                  seen;
    bool                               header = false;
    std::size_t                        last_line = 0;

    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      last_line = lineno;
      auto [label, rest] = split_label(line, lineno);
      if (!header) {
        if (label.text != "elements") {
          throw ParseError(lineno, label.col, "expected 'elements:' header");
        }
        if (rest.empty()) {
          throw ParseError(lineno, line.size() + 1, "no elements declared");
        }
        for (auto const& tok : rest) {
          if (tok.text == "0") {
            throw ParseError(lineno, tok.col, "the name '0' is reserved");
          }
          if (!valid_name(tok.text)) {
            throw ParseError(lineno, tok.col,
                             "invalid element name '" + tok.text + "'");
          }
          if (index.count(tok.text)) {
            throw ParseError(lineno, tok.col,
                             "duplicate element '" + tok.text + "'");
          }
          index.emplace(tok.text, static_cast<ElementId>(names.size()));
          names.push_back(tok.text);
        }
        rows.resize(names.size());
        row_line.resize(names.size());
        seen.assign(names.size(), 0);
        header = true;
        continue;
      }
      auto it = index.find(label.text);
      if (it == index.end()) {
        throw ParseError(lineno, label.col,
                         "unknown row label '" + label.text + "'");
      }
      if (seen[it->second]) {
        throw ParseError(lineno, label.col,
                         "duplicate row '" + label.text + "'");
      }
      if (rest.size() != names.size()) {
        std::size_t col = rest.size() > names.size() ? rest[names.size()].col
                                                     : line.size() + 1;
        throw ParseError(lineno, col,
                         "expected " + std::to_string(names.size())
                             + " entries, found "
                             + std::to_string(rest.size()));
      }
      seen[it->second]     = 1;
      rows[it->second]     = std::move(rest);
      row_line[it->second] = lineno;
    }
    if (!header) {
      throw ParseError(lineno + 1, 1, "missing 'elements:' header");
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!seen[i]) {
        throw ParseError(last_line + 1, 1, "missing row '" + names[i] + "'");
      }
    }

    bool dot = false;
    for (auto const& r : rows) {
      for (auto const& tok : r) {
        dot = dot || tok.text == ".";
      }
    }
    std::size_t const n    = names.size() + (dot ? 1 : 0);
    ElementId const   zero = static_cast<ElementId>(names.size());
    Table             table(n, std::vector<ElementId>(n, zero));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        auto const& tok = rows[i][j];
        if (tok.text == ".") {
          continue;
        }
        auto e = index.find(tok.text);
        if (e == index.end()) {
          throw ParseError(row_line[i], tok.col,
                           "unknown element '" + tok.text + "'");
        }
        table[i][j] = e->second;
      }
    }
    if (dot) {
      names.push_back("0");
      return FiniteSemigroup::validate(table, std::move(names), zero);
    }
    return FiniteSemigroup::validate(table, std::move(names));
  }

  FiniteSemigroup load_semigroup(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, 0, "cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_semigroup(buf.str());
  }

  std::string print_semigroup(FiniteSemigroup const& S) {
    std::size_t n = S.order();
    // An adjoined zero is printed as '.' and dropped from the rows.
    bool dotted = S.has_zero() && *S.zero() == n - 1 && S.name(n - 1) == "0";
    std::size_t const m = dotted ? n - 1 : n;
    std::string       out = "elements:";
    for (ElementId s = 0; s < m; ++s) {
      out += " " + S.name(s);
    }
    out += "\n";
    for (ElementId s = 0; s < m; ++s) {
      out += S.name(s) + ":";
      for (ElementId t = 0; t < m; ++t) {
        ElementId p = S.product(s, t);
        out += " " + (dotted && p == n - 1 ? std::string(".") : S.name(p));
      }
      out += "\n";
    }
    return out;
  }

  FactorizationReport report_factorization(FiniteSemigroup const&     S,
                                           FactorizationResult const& F) {
    FactorizationReport out;
    auto const&         names = S.names();
    for (auto const& b : F.blocks) {
      FactorBlockReport r;
      r.idempotent = S.name(b.idempotent);
      for (ElementId x : b.rows) {
        r.rows.push_back(S.name(x));
      }
      for (ElementId x : b.cols) {
        r.cols.push_back(S.name(x));
      }
      r.det             = render(b.det, names);
      r.det_substituted = render(b.det_substituted, names);
      out.blocks.push_back(std::move(r));
    }
    out.sign     = F.sign;
    out.verified = F.verified;
    out.product  = render(F.product, names);
    return out;
  }

  ClassificationReport classify(FiniteSemigroup const& S,
                                std::string const&     name,
                                std::size_t            max_dim) {
    ClassificationReport r;
    auto const&          names = S.names();
    r.name     = name;
    r.order    = S.order();
    r.elements = names;
    r.has_zero = S.has_zero();
    r.unital   = S.unital();
    if (r.unital) {
      std::vector<std::pair<std::string, std::string>> id;
      auto const&                                      v = *S.identity();
      for (ElementId s : v.support()) {
        id.emplace_back(S.name(s), rational_str(v[s]));
      }
      r.identity = std::move(id);
    }
    r.singleton_rich = S.singleton_rich();
    if (!r.singleton_rich) {
      if (auto const& e = S.empty_phi()) {
        r.witnesses.push_back(
            std::string(e->second == Side::star ? "phi*(" : "phi+(")
            + S.name(e->first) + ") is empty");
      } else {
        for (ElementId s = 0; s < S.order(); ++s) {
          auto [st, pl] = star_plus(S, s);
          if (st.size() != 1 || pl.size() != 1) {
            r.witnesses.push_back("s** or s++ is not a singleton for s = "
                                  + S.name(s));
            break;
          }
        }
      }
    }

    r.determinant = render(theta(S, max_dim), names);
    MultiPoly ref;
    if (r.has_zero) {
      ref                      = theta_contracted(S, max_dim);
      r.contracted_determinant = render(ref, names);
    } else {
      ref = theta(S, max_dim);
    }
    r.nonzero = !ref.is_zero();

    if (r.singleton_rich) {
      try {
        LLPoset P       = build_poset(S);
        r.ll_transitive = P.is_transitive();
        for (auto const& c : non_transitive_chains(P)) {
          if (r.witnesses.size() >= 10) {
            break;
          }
          r.witnesses.push_back(S.name(c.low) + " << " + S.name(c.mid)
                                + " << " + S.name(c.high) + " but not "
                                + S.name(c.low) + " << " + S.name(c.high));
        }
        if (r.ll_transitive && r.unital) {
          StarAlgebra A       = build_star_algebra(S, P);
          auto        smooth  = is_smooth(S, P, A.sequences());
          auto        imposed = imposed_condition(S, P);
          r.smooth            = smooth.holds;
          r.imposed_condition = imposed.holds;
          for (auto const& w : smooth.witnesses) {
            r.witnesses.push_back(w);
          }
          for (auto const& w : imposed.witnesses) {
            r.witnesses.push_back(w);
          }
          if (smooth.holds) {
            try {
              r.factorization = report_factorization(S, factorize(S, max_dim));
            } catch (DimensionCap const&) {
              throw;
            } catch (Error const& e) {
              r.factorization = FactorizationReport{};
              r.witnesses.push_back(std::string("factorization failed: ")
                                    + e.what());
            }
          }
        }
      } catch (AntisymmetryViolation const& e) {
        r.ll_transitive = false;
        r.witnesses.push_back(e.what());
      }
    }
    r.table = print_semigroup(S);
    return r;
  }

  std::string emit_report(ClassificationReport const& r, int indent) {
    using json = nlohmann::ordered_json;
    json j;
    j["name"]     = r.name;
    j["order"]    = r.order;
    j["elements"] = r.elements;
    j["has_zero"] = r.has_zero;
    j["unital"]   = r.unital;
    if (r.identity) {
      json id = json::object();
      for (auto const& [k, v] : *r.identity) {
        // Integral coefficients as numbers, others as "p/q".
        if (v.find('/') == std::string::npos) {
          id[k] = std::stoll(v);
        } else {
          id[k] = v;
        }
      }
      j["identity"] = id;
    } else {
      j["identity"] = nullptr;
    }
    j["singleton_rich"] = r.singleton_rich;
    j["ll_transitive"]  = r.ll_transitive;
    j["smooth"] = r.smooth ? json(*r.smooth) : json(nullptr);
    j["imposed_condition"]
        = r.imposed_condition ? json(*r.imposed_condition) : json(nullptr);
    j["determinant"] = r.determinant;
    j["contracted_determinant"] = r.contracted_determinant
                                      ? json(*r.contracted_determinant)
                                      : json(nullptr);
    j["determinant_nonzero"] = r.nonzero;
    if (r.factorization) {
      json f;
      json blocks = json::array();
      for (auto const& b : r.factorization->blocks) {
        json jb;
        jb["idempotent"]      = b.idempotent;
        jb["rows"]            = b.rows;
        jb["cols"]            = b.cols;
        jb["det"]             = b.det;
        jb["det_substituted"] = b.det_substituted;
        blocks.push_back(std::move(jb));
      }
      f["blocks"]       = std::move(blocks);
      f["sign"]         = r.factorization->sign;
      f["verified"]     = r.factorization->verified;
      f["product"]      = r.factorization->product;
      j["factorization"] = std::move(f);
    } else {
      j["factorization"] = nullptr;
    }
    j["witnesses"] = r.witnesses;
    j["table"]     = r.table;
    return j.dump(indent);
  }

}  // namespace semidet
