#include "core/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace slnr {

namespace {

void append_sample_line(std::string& out, const SinrSample& s) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%d,%d,%s,%s,%.6f\n", s.drop_id, s.user,
                s.layer, to_string(s.scheme), to_string(s.receiver), s.sinr_db);
  out += buf;
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string samples_to_csv(const std::vector<SinrSample>& samples) {
  std::string out = "drop_id,user,layer,scheme,receiver,sinr_db\n";
  for (const SinrSample& s : samples) append_sample_line(out, s);
  return out;
}

void write_samples_csv(const std::vector<SinrSample>& samples, const std::string& path) {
  write_text_file(samples_to_csv(samples), path);
}

std::vector<SinrSample> samples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "drop_id,user,layer,scheme,receiver,sinr_db")
    throw ParseError("sample CSV: missing or wrong header");
  std::vector<SinrSample> samples;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    std::vector<std::string> parts;
    while (std::getline(fields, field, ',')) parts.push_back(field);
    if (parts.size() != 6)
      throw ParseError("sample CSV line " + std::to_string(line_no) +
                       ": expected 6 fields");
    SinrSample s;
    try {
      s.drop_id = std::stoull(parts[0]);
      s.user = std::stoi(parts[1]);
      s.layer = std::stoi(parts[2]);
      s.scheme = scheme_from_string(parts[3]);
      s.receiver = receiver_from_string(parts[4]);
      s.sinr_db = std::stod(parts[5]);
    } catch (const ValidationError&) {
      throw ParseError("sample CSV line " + std::to_string(line_no) +
                       ": bad scheme or receiver tag");
    } catch (const std::exception&) {
      throw ParseError("sample CSV line " + std::to_string(line_no) + ": bad number");
    }
    samples.push_back(s);
  }
  return samples;
}

std::vector<SinrSample> read_samples_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open sample CSV: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return samples_from_csv(buf.str());
}

std::string summary_text(const CampaignResult& result) {
  std::ostringstream out;
  char buf[160];
  out << "campaign: receiver=" << to_string(result.config.receiver)
      << " drops=" << result.config.drops << " seed=" << result.config.seed
      << " feedback_iters=" << result.config.feedback_iters
      << " resampled_drops=" << result.resample_count << "\n";

  const CampaignSummary* original = nullptr;
  const CampaignSummary* layered = nullptr;
  for (const CampaignSummary& s : result.summaries) {
    if (s.scheme == Scheme::kOriginalSlnr) original = &s;
    if (s.scheme == Scheme::kLayerSlnr) layered = &s;
  }

  if (result.paired && original && layered) {
    out << "effective layer SINR percentiles [dB]\n";
    out << "    p     original_slnr    layer_slnr       gap\n";
    for (std::size_t i = 0; i < original->percentiles_db.size(); ++i) {
      const auto [p, a] = original->percentiles_db[i];
      const double b = layered->percentiles_db[i].second;
      std::snprintf(buf, sizeof(buf), "  %4.2f  %14.4f  %12.4f  %8.4f\n", p, a, b, b - a);
      out << buf;
    }
    double mean_delta = 0.0;
    if (original->sample_count > 0) {
      // canonical order pairs the schemes sample-for-sample
      double acc = 0.0;
      std::uint64_t count = 0;
      for (std::size_t i = 0; i + 1 < result.samples.size(); i += 2) {
        acc += result.samples[i + 1].sinr_db - result.samples[i].sinr_db;
        ++count;
      }
      mean_delta = count ? acc / static_cast<double>(count) : 0.0;
    }
    std::snprintf(buf, sizeof(buf), "mean per-layer gap: %.4f dB over %" PRIu64 " samples\n",
                  mean_delta, original->sample_count);
    out << buf;
    return out.str();
  }

  for (const CampaignSummary& s : result.summaries) {
    out << "scheme=" << to_string(s.scheme) << " samples=" << s.sample_count << "\n";
    out << "    p   sinr_db\n";
    for (const auto& [p, v] : s.percentiles_db) {
      std::snprintf(buf, sizeof(buf), "  %4.2f  %8.4f\n", p, v);
      out << buf;
    }
  }
  return out.str();
}

void write_cdf_csv(const CampaignResult& result, const std::string& path) {
  std::string text = "scheme,receiver,sinr_db,cum_prob\n";
  char buf[160];
  for (const CampaignSummary& s : result.summaries) {
    for (std::size_t i = 0; i < s.cdf.values.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%s,%s,%.6f,%.8f\n", to_string(s.scheme),
                    to_string(s.receiver), s.cdf.values[i], s.cdf.probs[i]);
      text += buf;
    }
  }
  write_text_file(text, path);
}

void write_plot_script(const std::string& csv_path, const std::string& script_path) {
  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
     << "\"\"\"Plot effective-layer-SINR CDFs from a sample CSV.\"\"\"\n"
     << "import csv\n"
     << "from collections import defaultdict\n"
     << "\n"
     << "import matplotlib\n"
     << "matplotlib.use(\"Agg\")\n"
     << "import matplotlib.pyplot as plt\n"
     << "\n"
     << "CSV_PATH = \"" << csv_path << "\"\n"
     << "OUT_PATH = \"" << script_path << ".png\"\n"
     << "\n"
     << "series = defaultdict(list)\n"
     << "with open(CSV_PATH, newline=\"\") as fh:\n"
     << "    for row in csv.DictReader(fh):\n"
     << "        key = (row[\"scheme\"], row[\"receiver\"])\n"
     << "        series[key].append(float(row[\"sinr_db\"]))\n"
     << "\n"
     << "fig, ax = plt.subplots(figsize=(6.0, 4.5))\n"
     << "for (scheme, receiver), values in sorted(series.items()):\n"
     << "    values.sort()\n"
     << "    n = len(values)\n"
     << "    probs = [(i + 1) / n for i in range(n)]\n"
     << "    ax.step(values, probs, where=\"post\", label=f\"{scheme} ({receiver})\")\n"
     << "ax.set_xlabel(\"effective layer SINR [dB]\")\n"
     << "ax.set_ylabel(\"CDF\")\n"
     << "ax.set_ylim(0.0, 1.0)\n"
     << "ax.grid(True, alpha=0.4)\n"
     << "ax.legend()\n"
     << "fig.tight_layout()\n"
     << "fig.savefig(OUT_PATH, dpi=150)\n"
     << "print(f\"wrote {OUT_PATH}\")\n";
  write_text_file(py.str(), script_path);
}

}  // namespace slnr
