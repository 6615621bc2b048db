#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "finsphere/config/config.hpp"

namespace finsphere::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnresolved = 2;
inline constexpr int kExitBackend = 3;

/// Loads and validates a store directory, printing record counts. When
/// `save_to` is set, writes the normalized store back out there.
int cmd_ingest(const config::RunConfig& cfg, const std::string& save_to,
               std::ostream& out = std::cout, std::ostream& err = std::cerr);

/// Runs one query through the pipeline and writes report.json / report.txt
/// under cfg.output_dir. Exit 2 when the query names no (or several)
/// instruments, 3 on backend failure, 1 on config or data errors.
int cmd_analyze(const config::RunConfig& cfg, const std::string& query,
                const std::string& as_of, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

/// Analyzes every query in a file (one per line, or CSV with header
/// `query_id,query,as_of`). Writes per-query report files plus manifest.csv;
/// individual failures are recorded and the batch continues.
int cmd_batch(const config::RunConfig& cfg, const std::string& queries_file,
              const std::string& as_of, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

/// Scores reports. `path` is either a directory of report JSON files (rows
/// are computed, heuristically or with --judge tiers) or an existing score
/// CSV (rows are read as-is). Prints the per-model mean summary and, for
/// directories, writes scores.csv.
int cmd_score(const config::RunConfig& cfg, const std::string& path,
              const std::string& mode, const std::string& judge_file,
              const std::string& model_id, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

/// Inter-group rank agreement over two or more score CSVs; prints the
/// pairwise tau-b matrix (percent) with an Average column.
int cmd_agreement(const std::vector<std::string>& group_files,
                  std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace finsphere::cli
