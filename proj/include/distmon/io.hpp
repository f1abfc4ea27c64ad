// JSON and CSV encodings shared by the CLI and the test suites.
//
// Monoid files hold {"n": <int>, "table": [[...], ...]} with the full
// (n + 1) x (n + 1) table in row-major order.  Counts are always written as
// decimal strings.

#ifndef DISTMON_IO_HPP_
#define DISTMON_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "distmon/builders.hpp"
#include "distmon/census.hpp"
#include "distmon/table.hpp"

namespace distmon {

  using Json = nlohmann::ordered_json;

  Json          to_json(AdditionTable const& t);
  AdditionTable table_from_json(Json const& j);

  //! Pretty text form: one table row per line.
  std::string   format_table(AdditionTable const& t);
  AdditionTable parse_table(std::string_view text);

  AdditionTable read_table_file(std::filesystem::path const& path);
  void write_table_file(std::filesystem::path const& path,
                        AdditionTable const&         t);

  Json to_json(ValidationReport const& r);

  //! {"n", "arch", "class_sizes", "idempotents", "ap_longest",
  //!  "ap_per_element"}
  Json analysis_json(Monoid const& t);

  //! {"n", "magma_count", "monoid_count", "by_arch"}; magma_count is null
  //! when the census did not count magmas.
  Json         to_json(CensusResult const& r);
  CensusResult census_from_json(Json const& j);

  //! Writes emitted tables as monoid_000001.json, ... in visit order.
  void write_emission(std::filesystem::path const&      dir,
                      std::vector<AdditionTable> const& tables);
  std::vector<AdditionTable> read_emission(std::filesystem::path const& dir);

  //! Header "n,k,count", one line per 1 <= k <= n <= rows.size().
  std::string dm_table_csv(std::vector<std::vector<BigCount>> const& rows);
  std::vector<std::vector<BigCount>> parse_dm_table_csv(std::string_view text);

  Json            to_json(Complexity2Spec const& spec);
  Complexity2Spec spec_from_json(Json const& j);

  //! Parses with nlohmann::json, translating failures into ParseError.
  Json parse_json(std::string_view text);
  std::string read_text_file(std::filesystem::path const& path);

}  // namespace distmon

#endif  // DISTMON_IO_HPP_
