#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperspace/database.hpp"
#include "hyperspace/dnn.hpp"
#include "hyperspace/graph.hpp"
#include "hyperspace/properties.hpp"
#include "hyperspace/tsv.hpp"

namespace hyperspace::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    data_error = 2,
    property_violation = 3,
};

namespace detail {

/// Data problems reported with exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError(path + ": cannot open file");
    return in;
}

template <typename F>
auto with_file(const std::string& path, F&& read) {
    auto in = open(path);
    try {
        return read(in);
    } catch (const FormatError& e) {
        throw DataError(e.in_file(path).what());
    } catch (const DomainError& e) {
        throw DataError(path + ": " + e.what());
    }
}

inline AssocArray read_array(const std::string& path, const Semiring& s, TsvOptions opts = {}) {
    return with_file(path, [&](std::istream& in) { return read_triples(in, s, opts); });
}

inline TableArray read_table(const std::string& path) {
    return with_file(path, [](std::istream& in) { return ingest_tsv(in); });
}

inline KeyVector parse_key_list(const std::string& csv) {
    KeyVector out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            out.push_back(parse_key(csv.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

inline std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            out.push_back(csv.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace detail

/// Runs one batch command. `args` excludes the program name. Results go to
/// `out` as triple TSV (or a property report); diagnostics go to `err`.
///
/// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 when
/// check-properties finds a violated law.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypersparse associative-array algebra: batch ingestion and queries", "hyperspace"};
    app.require_subcommand(1, 1);

    std::string semiring_name = "plus.times";
    bool space_delim = false;

    std::string table_file, triples_file;
    auto* ingest = app.add_subcommand("ingest", "Read a table or triple file and emit canonical triples");
    auto* ingest_table = ingest->add_option("--table", table_file, "Table TSV with a header line");
    auto* ingest_triples = ingest->add_option("--triples", triples_file, "Triple TSV");
    ingest_table->excludes(ingest_triples);
    ingest->add_option("--semiring", semiring_name, "Semiring for --triples values");
    ingest->add_flag("--space-delim", space_delim, "Input triples are space separated");

    std::string where, cols_csv, engine = "direct";
    auto* select = app.add_subcommand("select", "select COLS from TABLE where COL = VALUE");
    select->add_option("--table", table_file, "Table TSV")->required();
    select->add_option("--where", where, "Condition COL=VALUE")->required();
    select->add_option("--cols", cols_csv, "Comma-separated result columns")->required();
    select->add_option("--engine", engine, "direct or semilink")
        ->check(CLI::IsMember({"direct", "semilink"}));

    std::string eout_file, ein_file;
    auto* adjacency_cmd = app.add_subcommand("adjacency", "Adjacency array E_out^T E_in");
    adjacency_cmd->add_option("--eout", eout_file, "Outgoing incidence triples")->required();
    adjacency_cmd->add_option("--ein", ein_file, "Incoming incidence triples")->required();
    adjacency_cmd->add_option("--semiring", semiring_name, "Semiring of the incidence values");

    std::string graph_file, seeds_csv;
    std::optional<std::size_t> max_depth;
    auto* bfs_cmd = app.add_subcommand("bfs", "Breadth-first levels from seed vertices");
    bfs_cmd->add_option("--graph", graph_file, "Adjacency triples")->required();
    bfs_cmd->add_option("--seed", seeds_csv, "Comma-separated seed vertices")->required();
    bfs_cmd->add_option("--max-depth", max_depth, "Stop after this many levels");
    bfs_cmd->add_option("--semiring", semiring_name, "Semiring of the adjacency values");

    std::string layers_csv, biases_csv, input_file, mode = "standard";
    auto* infer_cmd = app.add_subcommand("infer", "Sparse ReLU network inference");
    infer_cmd->add_option("--layers", layers_csv, "Comma-separated weight files")->required();
    infer_cmd->add_option("--biases", biases_csv, "Comma-separated bias files")->required();
    infer_cmd->add_option("--input", input_file, "Input feature triples")->required();
    infer_cmd->add_option("--mode", mode, "standard or semiring")
        ->check(CLI::IsMember({"standard", "semiring"}));
    infer_cmd->add_flag("--space-delim", space_delim, "Input triples are space separated");

    std::uint64_t seed = 42;
    std::size_t trials = 200;
    auto* check_cmd = app.add_subcommand("check-properties", "Run the semilink property suite");
    check_cmd->add_option("--seed", seed, "Random seed");
    check_cmd->add_option("--trials", trials, "Trials per property and semiring");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    std::optional<Semiring> semiring;
    try {
        semiring = make_semiring(semiring_name);
    } catch (const NameError& e) {
        err << e.what() << '\n';
        return usage_error;
    }
    const TsvOptions opts{space_delim};

    try {
        if (ingest->parsed()) {
            if (!table_file.empty()) {
                write_triples(out, detail::read_table(table_file).array);
            } else if (!triples_file.empty()) {
                write_triples(out, detail::read_array(triples_file, *semiring, opts));
            } else {
                err << "ingest: one of --table or --triples is required\n";
                return usage_error;
            }
        } else if (select->parsed()) {
            const auto eq = where.find('=');
            if (eq == std::string::npos) {
                err << "select: --where expects COL=VALUE\n";
                return usage_error;
            }
            const Key cond_col = parse_key(where.substr(0, eq));
            const Value v(StringSet{where.substr(eq + 1)});
            const TableArray table = detail::read_table(table_file);
            const KeyVector cols = detail::parse_key_list(cols_csv);
            write_triples(out, engine == "semilink" ? select_semilink(table, cols, cond_col, v)
                                                    : select_direct(table, cols, cond_col, v));
        } else if (adjacency_cmd->parsed()) {
            IncidencePair inc{detail::read_array(eout_file, *semiring),
                              detail::read_array(ein_file, *semiring)};
            write_triples(out, adjacency(inc));
        } else if (bfs_cmd->parsed()) {
            const AssocArray graph = detail::read_array(graph_file, *semiring);
            const BfsResult r =
                bfs(graph, detail::parse_key_list(seeds_csv), max_depth.value_or(unlimited_depth));
            for (const auto& [vertex, depth] : r.levels) {
                out << format_key(vertex) << '\t' << format_key(keys::level) << '\t' << depth << '\n';
            }
        } else if (infer_cmd->parsed()) {
            Network net;
            try {
                net = load_network(detail::split_list(layers_csv), detail::split_list(biases_csv), opts);
            } catch (const FormatError& e) {
                throw detail::DataError(e.what());
            }
            const AssocArray y0 = detail::read_array(input_file, plus_times, opts);
            write_triples(out, infer(net, y0,
                                     mode == "semiring" ? InferenceMode::semiring
                                                        : InferenceMode::standard));
        } else if (check_cmd->parsed()) {
            bool all_passed = true;
            for (const auto& o : run_semilink_suite(seed, trials)) {
                out << o.property << '\t' << o.semiring.name() << '\t' << (o.passed() ? "pass" : "FAIL")
                    << '\t' << (o.trials - o.failures) << '/' << o.trials << '\n';
                if (!o.passed()) {
                    all_passed = false;
                    if (o.first_witness) {
                        err << o.property << " (" << o.semiring.name() << ") counterexample:\n";
                        for (const auto& operand : o.first_witness->operands) {
                            err << "operand\n" << export_tsv(operand);
                        }
                        err << "lhs\n" << export_tsv(o.first_witness->lhs) << "rhs\n"
                            << export_tsv(o.first_witness->rhs);
                    }
                }
            }
            return all_passed ? ok : property_violation;
        }
    } catch (const detail::DataError& e) {
        err << e.what() << '\n';
        return data_error;
    } catch (const FormatError& e) {
        err << e.what() << '\n';
        return data_error;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return data_error;
    }
    return ok;
}

}  // namespace hyperspace::cli
