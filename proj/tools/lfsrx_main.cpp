#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lfsrx/lfsrx.hpp"

namespace {

using nlohmann::json;
using namespace lfsrx;

struct Options {
  std::string core = "slfsr";
  unsigned width = 16;
  std::string taps;
  std::string seed;
  std::string extractor = "vn";
  std::string preset;
  std::uint64_t count = 0;
  bool full_period = false;
  std::string format = "ascii";
  bool fips = false;
  std::string figures;
  std::string out_dir = ".";
  std::string input;
};

void add_generator_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--core", opt.core,
                  "core family: slfsr (standard) or elfsr (extended); slfsr16/elfsr16 pin the width to 16");
  cmd->add_option("--width", opt.width, "register length in flip-flops");
  cmd->add_option("--taps", opt.taps, "comma-separated 1-based tap positions, must include the last flip-flop");
  cmd->add_option("--seed", opt.seed, "initial register contents as hex, flip-flop 1 = least significant bit");
  cmd->add_option("--extractor", opt.extractor, "translation table: vn, 3be or run");
  cmd->add_option("--preset", opt.preset, "named generator preset (see the presets command)");
  auto* count = cmd->add_option("--count", opt.count, "number of valid output bits");
  auto* full = cmd->add_flag("--full-period", opt.full_period, "run over one full output period");
  count->excludes(full);
}

std::vector<std::string> split_list(const std::string& arg) {
  std::vector<std::string> out;
  std::string token;
  for (char c : arg) {
    if (c == ',') {
      out.push_back(token);
      token.clear();
    } else {
      token += c;
    }
  }
  out.push_back(token);
  return out;
}

std::vector<unsigned> parse_taps(const std::string& arg) {
  std::vector<unsigned> taps;
  for (const std::string& token : split_list(arg)) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--taps expects a comma-separated list of positions, got '" + arg + "'");
    taps.push_back(static_cast<unsigned>(std::stoul(token)));
  }
  return taps;
}

std::set<std::string> parse_figures(const std::string& arg) {
  static const std::set<std::string> known = {"fig07", "fig08", "fig09", "fig10", "fig11", "fig12", "fig13"};
  std::set<std::string> out;
  if (arg.empty()) return out;
  for (const std::string& token : split_list(arg)) {
    if (token == "all") out.insert(known.begin(), known.end());
    else if (known.count(token)) out.insert(token);
    else throw UsageError("unknown figure '" + token + "' (expected fig07..fig13 or all)");
  }
  return out;
}

ExtractorKind parse_extractor(const std::string& name) {
  if (name == "vn") return ExtractorKind::VonNeumann;
  if (name == "3be") return ExtractorKind::ThreeBit;
  if (name == "run") return ExtractorKind::RunTriplet;
  throw UsageError("unknown extractor '" + name + "' (expected vn, 3be or run)");
}

GeneratorSpec resolve_spec(const CLI::App& cmd, const Options& opt) {
  const bool preset_given = cmd.count("--preset") > 0;
  if (preset_given &&
      (cmd.count("--core") || cmd.count("--width") || cmd.count("--taps") || cmd.count("--extractor")))
    throw UsageError("--preset conflicts with --core/--width/--taps/--extractor (--seed may override)");

  GeneratorSpec spec;
  if (preset_given) {
    spec = find_preset(opt.preset).spec;
  } else {
    LfsrConfig cfg;
    if (opt.core == "slfsr" || opt.core == "slfsr16") cfg.mode = LfsrMode::Standard;
    else if (opt.core == "elfsr" || opt.core == "elfsr16") cfg.mode = LfsrMode::Extended;
    else throw UsageError("unknown core '" + opt.core + "' (expected slfsr or elfsr)");

    unsigned width = cmd.count("--width") ? opt.width : 16;
    if (opt.core == "slfsr16" || opt.core == "elfsr16") {
      if (cmd.count("--width") && width != 16) throw UsageError("core '" + opt.core + "' pins --width 16");
      width = 16;
    }
    cfg.length = width;
    if (cmd.count("--taps")) cfg.taps = parse_taps(opt.taps);
    else if (width != 16) throw UsageError("--width other than 16 needs an explicit --taps list");
    spec.core = cfg;
    spec.extractor = parse_extractor(opt.extractor);
  }

  if (cmd.count("--seed")) spec.seed = seed_from_hex(opt.seed, spec.core.length);
  else if (!preset_given)
    spec.seed = spec.core.mode == LfsrMode::Standard ? seed_from_hex("0x0001", spec.core.length)
                                                     : BitVec(spec.core.length, 0);
  spec.validate();
  return spec;
}

json ratio_json(const Ratio& r) {
  return {{"numerator", r.numerator}, {"denominator", r.denominator}, {"value", r.value}};
}

json generator_json(const GeneratorSpec& spec, const std::string& preset_name) {
  json j;
  j["core"] = spec.core.mode == LfsrMode::Extended ? "elfsr" : "slfsr";
  j["width"] = spec.core.length;
  j["taps"] = spec.core.taps;
  j["seed"] = seed_to_hex(spec.seed);
  j["extractor"] = extractor_name(spec.extractor);
  j["preset"] = preset_name.empty() ? json() : json(preset_name);
  return j;
}

json stats_json(const PeriodStats& st) {
  return {{"slots", st.slots},
          {"valid", st.valid},
          {"zeros", st.zeros},
          {"ones", st.ones},
          {"primary_bits", st.primary_bits},
          {"efficiency", ratio_json(st.efficiency)}};
}

json fips_json(const FipsReport& r) {
  json zeros = json::array(), ones = json::array();
  for (std::size_t bucket = 0; bucket < 6; ++bucket) {
    zeros.push_back(r.run_counts[0][bucket]);
    ones.push_back(r.run_counts[1][bucket]);
  }
  return {{"monobit", {{"count", r.monobit_count}, {"pass", r.monobit_pass}}},
          {"poker", {{"statistic", r.poker_statistic}, {"pass", r.poker_pass}}},
          {"runs", {{"zeros", zeros}, {"ones", ones}, {"pass", r.runs_pass}}},
          {"long_run", {{"longest", r.longest_run}, {"count", r.long_run_count}, {"pass", r.long_run_pass}}},
          {"pass", r.pass()}};
}

int cmd_presets() {
  for (const auto& p : default_presets()) std::cout << p.name << ": " << p.description << "\n";
  return 0;
}

int cmd_generate(const CLI::App& cmd, const Options& opt) {
  const GeneratorSpec spec = resolve_spec(cmd, opt);
  BitVec bits;
  if (opt.full_period) {
    bits = valid_bits_of(full_period_stream(spec).first);
  } else if (cmd.count("--count")) {
    Generator gen(spec);
    bits = gen.valid_bits(opt.count);
  } else {
    throw UsageError("generate needs --count or --full-period");
  }
  if (opt.format == "ascii") write_ascii(std::cout, bits);
  else write_packed(std::cout, bits);
  return 0;
}

int cmd_analyze(const CLI::App& cmd, const Options& opt) {
  json report;
  for (const char* key : {"generator", "period_stats", "fips", "correlation", "spectrum", "complexity", "cost"})
    report[key] = json();

  const std::set<std::string> figures = parse_figures(opt.figures);
  const bool have_input = cmd.count("--input") > 0;

  BitVec bits;
  std::vector<AnnotatedSymbol> symbols;
  bool full = false;
  if (have_input) {
    if (cmd.count("--preset") || cmd.count("--core") || cmd.count("--width") || cmd.count("--taps") ||
        cmd.count("--seed") || cmd.count("--extractor") || cmd.count("--count") || opt.full_period)
      throw UsageError("--input replaces the generator; drop the generator and stream-length flags");
    bits = read_bits_file(opt.input);
  } else {
    const GeneratorSpec spec = resolve_spec(cmd, opt);
    report["generator"] = generator_json(spec, cmd.count("--preset") ? opt.preset : std::string());
    if (opt.full_period) {
      auto stream = full_period_stream(spec);
      symbols = std::move(stream.first);
      report["period_stats"] = stats_json(stream.second);
      bits = valid_bits_of(symbols);
      full = true;
    } else {
      Generator gen(spec);
      bits = gen.valid_bits(cmd.count("--count") ? opt.count : kFipsBits);
    }
  }

  for (const char* fig : {"fig07", "fig08", "fig09", "fig10", "fig11", "fig13"})
    if (figures.count(fig) && !full)
      throw UsageError(std::string("figure ") + fig + " is defined over one full period; add --full-period");

  bool fips_pass = true;
  if (opt.fips) {
    BitVec window = bits;
    if (window.size() > kFipsBits) window.resize(kFipsBits);
    const FipsReport rep = run_fips(window);
    report["fips"] = fips_json(rep);
    fips_pass = rep.pass();
  }

  const std::filesystem::path out_dir = opt.out_dir;
  if (!figures.empty()) std::filesystem::create_directories(out_dir);

  if (figures.count("fig07") || figures.count("fig08")) {
    const std::vector<std::uint32_t> counts = pattern_counts(bits, 16);
    if (figures.count("fig07")) {
      SeriesTable table;
      table.label = "pattern counts";
      table.rows.reserve(counts.size());
      for (std::size_t p = 0; p < counts.size(); ++p)
        table.rows.push_back({static_cast<double>(p), static_cast<double>(counts[p]), std::nullopt});
      write_csv(table, out_dir / "fig07_patterns.csv");
    }
    if (figures.count("fig08"))
      write_csv(pattern_histogram(counts, bits.size()), out_dir / "fig08_pattern_hist.csv");
  }

  if (figures.count("fig09")) {
    const RunLengthHistogram hist = run_length_histogram(bits);
    write_csv(hist.zeros, out_dir / "fig09_run_lengths_zeros.csv");
    write_csv(hist.ones, out_dir / "fig09_run_lengths_ones.csv");
  }

  if (figures.count("fig10")) {
    const SeriesTable corr = autocorrelation(bits);
    write_csv(corr, out_dir / "fig10_correlation.csv");
    report["correlation"] = {{"r0", corr.rows[0].y},
                             {"sigma", correlation_sigma(corr)},
                             {"lags", corr.rows.size() - 1}};
  }

  if (figures.count("fig11")) {
    const auto [table, summary] = power_spectrum_with_summary(bits);
    write_csv(table, out_dir / "fig11_spectrum.csv");
    report["spectrum"] = {{"p0", summary.p0},
                          {"mean_nondc", summary.mean_nondc},
                          {"parseval_lhs", summary.parseval_lhs},
                          {"parseval_rhs", summary.parseval_rhs},
                          {"bins", summary.bins}};
  }

  if (figures.count("fig12")) {
    const std::uint64_t stride = 64;
    const ComplexityProfile profile = complexity_profile(bits, stride);
    if (profile.rows.empty()) throw LengthError("stream shorter than the complexity profile stride");
    SeriesTable table;
    table.label = "linear complexity profile";
    table.rows.reserve(profile.rows.size());
    double max_dev = 0.0;
    for (const auto& [l, lc] : profile.rows) {
      table.rows.push_back({static_cast<double>(l), static_cast<double>(lc), std::nullopt});
      max_dev = std::max(max_dev, std::abs(static_cast<double>(lc) - static_cast<double>(l) / 2.0));
    }
    write_csv(table, out_dir / "fig12_complexity.csv");
    report["complexity"] = {{"final_prefix", profile.rows.back().first},
                            {"final_l", profile.rows.back().second},
                            {"samples", profile.rows.size()},
                            {"max_abs_dev", max_dev},
                            {"stride", stride}};
  }

  if (figures.count("fig13")) {
    const SeriesTable hist = input_cost_histogram(symbols);
    write_csv(hist, out_dir / "fig13_cost.csv");
    json rows = json::array();
    std::uint64_t total = 0, weighted = 0;
    for (const auto& row : hist.rows) {
      rows.push_back({{"cost", static_cast<std::uint64_t>(row.x)}, {"count", static_cast<std::uint64_t>(row.y)}});
      total += static_cast<std::uint64_t>(row.y);
      weighted += static_cast<std::uint64_t>(row.x) * static_cast<std::uint64_t>(row.y);
    }
    report["cost"] = {{"histogram", rows}, {"valid_total", total}, {"primary_bits_attributed", weighted}};
  }

  std::cout << report.dump(2) << "\n";
  return opt.fips && !fips_pass ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LFSR cores with randomness-extracting translation tables"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* gen_cmd = app.add_subcommand("generate", "emit a stream of valid output bits");
  CLI::App* ana_cmd = app.add_subcommand("analyze", "run the statistical characterization, print a JSON report");
  CLI::App* pre_cmd = app.add_subcommand("presets", "list the built-in generators");
  add_generator_options(gen_cmd, opt);
  add_generator_options(ana_cmd, opt);
  gen_cmd->add_option("--format", opt.format, "ascii ('0'/'1' lines) or packed (LSB-first bytes)")
      ->check(CLI::IsMember({"ascii", "packed"}));
  ana_cmd->add_flag("--fips", opt.fips, "run the FIPS 140-1 battery on the first 20000 valid bits");
  ana_cmd->add_option("--figures", opt.figures, "comma-separated figure list (fig07..fig13) or all");
  ana_cmd->add_option("--out", opt.out_dir, "directory for the CSV exports (default: current directory)");
  ana_cmd->add_option("--input", opt.input, "analyze a recorded bit stream (ascii or packed, auto-detected)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (pre_cmd->parsed()) return cmd_presets();
    if (gen_cmd->parsed()) return cmd_generate(*gen_cmd, opt);
    return cmd_analyze(*ana_cmd, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
