#include "dagmcmc/text_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dagmcmc {

std::string dag_to_text(const Dag& dag) {
  const int n = dag.node_count();
  std::string out = "n=" + std::to_string(n) + "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out += ' ';
      out += dag.has_edge(j, i) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

Dag dag_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!(in >> header) || header.rfind("n=", 0) != 0)
    throw std::runtime_error("dag text: expected a leading n=<count> line");
  int n = 0;
  try {
    n = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("dag text: bad node count \"" + header + "\"");
  }
  if (n < 1 || n > kMaxNodes) throw std::runtime_error("dag text: node count out of range");
  std::vector<NodeMask> parents(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int bit = -1;
      if (!(in >> bit) || (bit != 0 && bit != 1))
        throw std::runtime_error("dag text: row " + std::to_string(i + 1) +
                                 " needs " + std::to_string(n) + " 0/1 entries");
      if (bit == 1) parents[i] |= node_bit(j);
    }
  }
  return Dag::from_parent_masks(std::move(parents));
}

Dag load_dag_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return dag_from_text(buffer.str());
}

void save_dag_text(const std::string& path, const Dag& dag) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << dag_to_text(dag);
}

std::string partition_to_text(const LabelledPartition& part) {
  std::string out;
  for (int e = 0; e < part.element_count(); ++e) {
    if (e > 0) out += ',';
    out += std::to_string(part.element_size(e));
  }
  out += '|';
  for (int e = 0; e < part.element_count(); ++e) {
    if (e > 0) out += ';';
    const auto& el = part.element(e);
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(el[i] + 1);
    }
  }
  return out;
}

void write_trace_csv(const std::string& path, const ChainTrace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write trace file: " + path);
  out << "step,state_log_score,dag_log_score\n";
  char buf[128];
  for (const TraceRecord& r : trace.records) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g\n", r.step, r.state_log_score,
                  r.dag_log_score);
    out << buf;
  }
}

void write_trace_dags(const std::string& path, const ChainTrace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  bool first = true;
  for (const TraceRecord& r : trace.records) {
    if (!r.dag) continue;
    if (!first) out << '\n';
    out << dag_to_text(*r.dag);
    first = false;
  }
}

void write_edge_posterior_csv(const std::string& path,
                              const std::vector<std::vector<double>>& matrix) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write posterior file: " + path);
  char buf[32];
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      std::snprintf(buf, sizeof(buf), "%.6f", row[j]);
      out << buf;
    }
    out << '\n';
  }
}

std::vector<std::vector<double>> load_edge_posterior_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open posterior file: " + path);
  std::vector<std::vector<double>> matrix;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    matrix.push_back(std::move(row));
  }
  return matrix;
}

void write_score_table_csv(const std::string& path, const ScoreTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write score table file: " + path);
  out << "node,parent_mask,log_score\n";
  char buf[64];
  for (int node = 0; node < table.variable_count(); ++node) {
    for (const ScoreEntry& e : table.entries(node)) {
      std::snprintf(buf, sizeof(buf), "%d,%llu,%.17g\n", node + 1,
                    static_cast<unsigned long long>(e.parents), e.log_score);
      out << buf;
    }
  }
}

}  // namespace dagmcmc
