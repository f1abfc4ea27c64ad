#include "distmon/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "distmon/arch.hpp"

namespace distmon {

  namespace {
    std::size_t as_index(Json const& v, char const* what) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    BigCount as_count(Json const& v, char const* what) {
      if (!v.is_string()) {
        throw ParseError(std::string(what) + " must be a decimal string");
      }
      return parse_decimal(v.get<std::string>());
    }

    Json const& member(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }
  }  // namespace

  Json parse_json(std::string_view text) {
    try {
      return Json::parse(text.begin(), text.end());
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  Json to_json(AdditionTable const& t) {
    Json j;
    j["n"]     = t.n();
    j["table"] = t.rows();
    return j;
  }

  AdditionTable table_from_json(Json const& j) {
    std::size_t const n     = as_index(member(j, "n"), "\"n\"");
    Json const&       table = member(j, "table");
    if (!table.is_array()) {
      throw ParseError("\"table\" must be an array of rows");
    }
    std::vector<std::vector<element_type>> entries;
    for (auto const& row : table) {
      if (!row.is_array()) {
        throw ParseError("every table row must be an array");
      }
      std::vector<element_type> cells;
      for (auto const& c : row) {
        cells.push_back(as_index(c, "table cell"));
      }
      entries.push_back(std::move(cells));
    }
    return AdditionTable::from_entries(n, entries);
  }

  std::string format_table(AdditionTable const& t) {
    std::string out = "{\n  \"n\": " + std::to_string(t.n()) + ",\n  \"table\": [\n";
    for (std::size_t i = 0; i <= t.n(); ++i) {
      out += "    [";
      for (std::size_t j = 0; j <= t.n(); ++j) {
        out += (j ? ", " : "") + std::to_string(t(i, j));
      }
      out += i < t.n() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
  }

  AdditionTable parse_table(std::string_view text) {
    return table_from_json(parse_json(text));
  }

  AdditionTable read_table_file(std::filesystem::path const& path) {
    return parse_table(read_text_file(path));
  }

  void write_table_file(std::filesystem::path const& path,
                        AdditionTable const&         t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    out << format_table(t);
  }

  Json to_json(ValidationReport const& r) {
    Json j;
    j["is_magma"]        = r.is_magma;
    j["is_monoid"]       = r.is_monoid;
    j["violation_count"] = r.violation_count;
    Json list            = Json::array();
    for (auto const& v : r.violations) {
      list.push_back({{"axiom", std::string(axiom_name(v.axiom))},
                      {"witness", v.witness}});
    }
    j["violations"] = std::move(list);
    return j;
  }

  Json analysis_json(Monoid const& t) {
    auto profile = ap_profile(t);
    Json j;
    j["n"]              = t.n();
    j["arch"]           = arch_complexity(t);
    j["class_sizes"]    = decompose(t).sizes;
    j["idempotents"]    = idempotents(t.table());
    j["ap_longest"]     = profile.longest;
    j["ap_per_element"] = profile.per_element;
    return j;
  }

  Json to_json(CensusResult const& r) {
    Json j;
    j["n"] = r.n;
    if (r.magma_count) {
      j["magma_count"] = to_decimal(*r.magma_count);
    } else {
      j["magma_count"] = nullptr;
    }
    j["monoid_count"] = to_decimal(r.monoid_count);
    Json by_arch      = Json::object();
    for (auto const& [k, count] : r.by_arch) {
      by_arch[std::to_string(k)] = to_decimal(count);
    }
    j["by_arch"] = std::move(by_arch);
    return j;
  }

  CensusResult census_from_json(Json const& j) {
    CensusResult r;
    r.n = as_index(member(j, "n"), "\"n\"");
    Json const& magmas = member(j, "magma_count");
    if (!magmas.is_null()) {
      r.magma_count = as_count(magmas, "\"magma_count\"");
    }
    r.monoid_count     = as_count(member(j, "monoid_count"), "\"monoid_count\"");
    Json const& by_arch = member(j, "by_arch");
    if (!by_arch.is_object()) {
      throw ParseError("\"by_arch\" must be an object");
    }
    for (auto const& [key, value] : by_arch.items()) {
      r.by_arch[static_cast<std::size_t>(parse_decimal(key))]
          = as_count(value, "by_arch entry");
    }
    return r;
  }

  void write_emission(std::filesystem::path const&      dir,
                      std::vector<AdditionTable> const& tables) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < tables.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "monoid_%06zu.json", i + 1);
      write_table_file(dir / name, tables[i]);
    }
  }

  std::vector<AdditionTable> read_emission(std::filesystem::path const& dir) {
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<AdditionTable> out;
    for (auto const& f : files) {
      out.push_back(read_table_file(f));
    }
    return out;
  }

  std::string dm_table_csv(std::vector<std::vector<BigCount>> const& rows) {
    std::string out = "n,k,count\n";
    for (std::size_t n = 1; n <= rows.size(); ++n) {
      for (std::size_t k = 1; k <= rows[n - 1].size(); ++k) {
        out += std::to_string(n) + "," + std::to_string(k) + ","
               + to_decimal(rows[n - 1][k - 1]) + "\n";
      }
    }
    return out;
  }

  std::vector<std::vector<BigCount>> parse_dm_table_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    if (!std::getline(in, line) || line != "n,k,count") {
      throw ParseError("CSV must start with the header n,k,count");
    }
    std::vector<std::vector<BigCount>> rows;
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      std::istringstream fields(line);
      std::string        n_text, k_text, count_text;
      if (!std::getline(fields, n_text, ',') || !std::getline(fields, k_text, ',')
          || !std::getline(fields, count_text)) {
        throw ParseError("malformed CSV line: " + line);
      }
      auto n = static_cast<std::size_t>(parse_decimal(n_text));
      auto k = static_cast<std::size_t>(parse_decimal(k_text));
      if (n == 0 || k == 0 || k > n || n > rows.size() + 1) {
        throw ParseError("CSV rows out of order: " + line);
      }
      if (n == rows.size() + 1) {
        rows.emplace_back();
      }
      if (rows[n - 1].size() + 1 != k) {
        throw ParseError("CSV rows out of order: " + line);
      }
      rows[n - 1].push_back(parse_decimal(count_text));
    }
    return rows;
  }

  Json to_json(Complexity2Spec const& spec) {
    Json j;
    j["composition"] = spec.composition;
    Json chains      = Json::object();
    for (auto const& [cls, sets] : spec.chains) {
      chains[std::to_string(cls)] = sets;
    }
    j["chains"] = std::move(chains);
    return j;
  }

  Complexity2Spec spec_from_json(Json const& j) {
    Complexity2Spec spec;
    Json const&     parts = member(j, "composition");
    if (!parts.is_array()) {
      throw ParseError("\"composition\" must be an array");
    }
    for (auto const& p : parts) {
      spec.composition.push_back(as_index(p, "composition part"));
    }
    if (j.contains("chains")) {
      Json const& chains = j.at("chains");
      if (!chains.is_object()) {
        throw ParseError("\"chains\" must be an object keyed by class index");
      }
      for (auto const& [key, sets] : chains.items()) {
        auto cls = static_cast<std::size_t>(parse_decimal(key));
        if (!sets.is_array()) {
          throw ParseError("chain for class " + key + " must be an array");
        }
        auto& out = spec.chains[cls];
        for (auto const& s : sets) {
          if (!s.is_array()) {
            throw ParseError("fixed-point sets must be arrays");
          }
          std::vector<std::size_t> fixed;
          for (auto const& x : s) {
            fixed.push_back(as_index(x, "fixed point"));
          }
          out.push_back(std::move(fixed));
        }
      }
    }
    return canonical(std::move(spec));
  }

}  // namespace distmon
