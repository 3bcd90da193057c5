#pragma once
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "lfsrx/bitpack.hpp"
#include "lfsrx/errors.hpp"
#include "lfsrx/extractor.hpp"
#include "lfsrx/lfsr.hpp"

namespace lfsrx {

enum class ExtractorKind { VonNeumann, ThreeBit, RunTriplet, RunLength };

inline const char* extractor_name(ExtractorKind k) {
  switch (k) {
    case ExtractorKind::VonNeumann: return "vn";
    case ExtractorKind::ThreeBit: return "3be";
    case ExtractorKind::RunTriplet: return "run";
    case ExtractorKind::RunLength: return "run-length";
  }
  return "?";
}

struct GeneratorSpec {
  LfsrConfig core;
  ExtractorKind extractor = ExtractorKind::VonNeumann;
  BitVec seed;

  void validate() const {
    core.validate();
    if (extractor == ExtractorKind::ThreeBit && core.mode != LfsrMode::Extended)
      throw ConfigError("the three-bit extractor requires an extended core");
  }
};

// Output slot tagged with the number of primary bits consumed since the
// previous valid bit. Invalid slots carry cost 0; their consumption is
// attributed to the next valid symbol.
struct AnnotatedSymbol {
  TriState symbol;
  std::uint32_t primary_cost;
};

struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  double value = 0.0;
};

inline Ratio make_ratio(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  Ratio r;
  r.numerator = g ? num / g : num;
  r.denominator = g ? den / g : den;
  r.value = den ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
  return r;
}

struct PeriodStats {
  std::uint64_t slots = 0;
  std::uint64_t valid = 0;
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
  std::uint64_t primary_bits = 0;
  Ratio efficiency;  // valid bits per primary bit
};

// Streaming generator: one extractor over one owned core state.
//
// Slot semantics per extractor:
//   VonNeumann  - every slot consumes two fresh primary bits (pairs are never
//                 recycled).
//   ThreeBit    - a block of three fresh primary bits yields two slots; the
//                 block is consumed when its first slot is produced.
//   RunTriplet  - every slot consumes one fresh primary bit after a two-bit
//                 warm-up that is charged to the first valid symbol.
//   RunLength   - every slot is a completed run, hence always valid.
class Generator {
 public:
  explicit Generator(const GeneratorSpec& spec)
      : spec_((spec.validate(), spec)), state_(spec.core, spec.seed) {}

  const GeneratorSpec& spec() const { return spec_; }
  std::uint64_t primary_consumed() const { return state_.clock(); }
  // Primary bits consumed but not yet attributed to a valid output bit.
  std::uint32_t pending_cost() const { return acc_; }

  AnnotatedSymbol next_slot() {
    switch (spec_.extractor) {
      case ExtractorKind::VonNeumann: {
        const int a0 = pull(), a1 = pull();
        return emit(von_neumann_step(a0, a1));
      }
      case ExtractorKind::ThreeBit: {
        if (have_pending_) {
          have_pending_ = false;
          return emit(pending_);
        }
        const int a0 = pull(), a1 = pull(), a2 = pull();
        const auto [b0, b1] = three_bit_step(a0, a1, a2);
        pending_ = b1;
        have_pending_ = true;
        return emit(b0);
      }
      case ExtractorKind::RunTriplet: {
        if (!warmed_) {
          w0_ = pull();
          w1_ = pull();
          warmed_ = true;
        }
        const int a2 = pull();
        const TriState t = run_triplet_step(w0_, w1_, a2);
        w0_ = w1_;
        w1_ = a2;
        return emit(t);
      }
      case ExtractorKind::RunLength: {
        if (!run_started_) {
          run_value_ = pull();
          run_length_ = 1;
          run_started_ = true;
        }
        for (;;) {
          const int b = pull();
          if (b == run_value_) {
            ++run_length_;
            continue;
          }
          const int out = run_length_step(run_value_, run_length_);
          run_value_ = b;
          run_length_ = 1;
          // the terminating bit belongs to the next run
          const std::uint32_t cost = acc_ - 1;
          acc_ = 1;
          return {make_tri(out), cost};
        }
      }
    }
    throw ConfigError("unknown extractor");
  }

  int next_valid() {
    for (;;) {
      const AnnotatedSymbol s = next_slot();
      if (is_valid(s.symbol)) return tri_bit(s.symbol);
    }
  }

  BitVec valid_bits(std::size_t count) {
    BitVec out;
    out.reserve(count);
    while (out.size() < count) out.push_back(static_cast<std::uint8_t>(next_valid()));
    return out;
  }

 private:
  int pull() {
    ++acc_;
    return state_.step();
  }

  AnnotatedSymbol emit(TriState t) {
    if (!is_valid(t)) return {t, 0};
    const std::uint32_t cost = acc_;
    acc_ = 0;
    return {t, cost};
  }

  GeneratorSpec spec_;
  LfsrState state_;
  std::uint32_t acc_ = 0;
  TriState pending_ = TriState::Invalid;
  bool have_pending_ = false;
  int w0_ = 0, w1_ = 0;
  bool warmed_ = false;
  int run_value_ = 0;
  std::uint64_t run_length_ = 0;
  bool run_started_ = false;
};

inline std::vector<AnnotatedSymbol> run_generator(const GeneratorSpec& spec, std::uint64_t slot_count) {
  Generator gen(spec);
  std::vector<AnnotatedSymbol> out;
  out.reserve(slot_count);
  for (std::uint64_t i = 0; i < slot_count; ++i) out.push_back(gen.next_slot());
  return out;
}

namespace detail {

inline std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

inline void fold_residual_into_first_valid(std::vector<AnnotatedSymbol>& symbols, std::int64_t residual) {
  if (residual == 0) return;
  for (auto& s : symbols) {
    if (is_valid(s.symbol)) {
      s.primary_cost = static_cast<std::uint32_t>(static_cast<std::int64_t>(s.primary_cost) + residual);
      return;
    }
  }
}

inline PeriodStats stats_of(const std::vector<AnnotatedSymbol>& symbols, std::uint64_t primary_bits) {
  PeriodStats st;
  st.slots = symbols.size();
  st.primary_bits = primary_bits;
  for (const auto& s : symbols) {
    if (!is_valid(s.symbol)) continue;
    ++st.valid;
    if (s.symbol == TriState::One) ++st.ones; else ++st.zeros;
  }
  st.efficiency = make_ratio(st.valid, primary_bits);
  return st;
}

}  // namespace detail

// One full output period, with the primary stream treated as circular:
// VonNeumann pairs tile lcm(P,2) primary bits, ThreeBit blocks tile lcm(P,3),
// the run extractor's window wraps around one primary period. Trailing
// unattributed consumption wraps onto the first valid symbol so that summing
// primary_cost over valid symbols equals primary_bits exactly.
inline std::pair<std::vector<AnnotatedSymbol>, PeriodStats> full_period_stream(const GeneratorSpec& spec) {
  spec.validate();
  check_enumerable(spec.core.length);
  const std::uint64_t period = measure_period(spec.core, spec.seed);

  if (spec.extractor == ExtractorKind::RunLength) {
    // Circular run decomposition of one primary period; each run is one valid
    // symbol costing its own length.
    LfsrState state(spec.core, spec.seed);
    BitVec primary(period);
    for (std::uint64_t i = 0; i < period; ++i) primary[i] = static_cast<std::uint8_t>(state.step());
    std::vector<AnnotatedSymbol> symbols;
    bool constant = true;
    for (std::uint64_t i = 1; i < period && constant; ++i) constant = primary[i] == primary[0];
    if (!constant) {
      for (const auto& [value, length] : circular_runs(primary)) {
        const int out = run_length_step(value, length);
        symbols.push_back({make_tri(out), static_cast<std::uint32_t>(length)});
      }
    }
    PeriodStats st = detail::stats_of(symbols, period);
    return {std::move(symbols), st};
  }

  std::uint64_t primary_bits = 0, slots = 0, warmup = 0;
  switch (spec.extractor) {
    case ExtractorKind::VonNeumann:
      primary_bits = detail::lcm64(period, 2);
      slots = primary_bits / 2;
      break;
    case ExtractorKind::ThreeBit:
      primary_bits = detail::lcm64(period, 3);
      slots = 2 * (primary_bits / 3);
      break;
    case ExtractorKind::RunTriplet:
      primary_bits = period;
      slots = period;
      warmup = 2;
      break;
    default:
      break;
  }

  Generator gen(spec);
  std::vector<AnnotatedSymbol> symbols;
  symbols.reserve(slots);
  for (std::uint64_t i = 0; i < slots; ++i) symbols.push_back(gen.next_slot());
  detail::fold_residual_into_first_valid(symbols,
                                         static_cast<std::int64_t>(gen.pending_cost()) - static_cast<std::int64_t>(warmup));
  PeriodStats st = detail::stats_of(symbols, primary_bits);
  return {std::move(symbols), st};
}

inline BitVec valid_bits_of(const std::vector<AnnotatedSymbol>& symbols) {
  BitVec out;
  out.reserve(symbols.size());
  for (const auto& s : symbols)
    if (is_valid(s.symbol)) out.push_back(static_cast<std::uint8_t>(tri_bit(s.symbol)));
  return out;
}

struct Preset {
  std::string name;
  GeneratorSpec spec;
  std::string description;
};

inline const std::vector<Preset>& default_presets() {
  static const std::vector<Preset> presets = [] {
    LfsrConfig std16{16, {11, 13, 14, 16}, LfsrMode::Standard};
    LfsrConfig ext16{16, {11, 13, 14, 16}, LfsrMode::Extended};
    const BitVec seed1 = seed_from_hex("0x0001", 16);
    const BitVec seed0(16, 0);
    std::vector<Preset> p;
    p.push_back({"slfsr16-vne", {std16, ExtractorKind::VonNeumann, seed1},
                 "standard core, period 65535, taps {11,13,14,16}, seed 0x0001, extractor vn (von Neumann pairs)"});
    p.push_back({"elfsr16-3be", {ext16, ExtractorKind::ThreeBit, seed0},
                 "extended core, period 65536, taps {11,13,14,16}, seed 0x0000, extractor 3be (three-bit blocks)"});
    p.push_back({"slfsr16-re", {std16, ExtractorKind::RunTriplet, seed1},
                 "standard core, period 65535, taps {11,13,14,16}, seed 0x0001, extractor run (run triplets)"});
    return p;
  }();
  return presets;
}

inline const Preset& find_preset(const std::string& name) {
  for (const auto& p : default_presets())
    if (p.name == name) return p;
  throw ConfigError("unknown preset '" + name + "' (available: slfsr16-vne, elfsr16-3be, slfsr16-re)");
}

}  // namespace lfsrx
