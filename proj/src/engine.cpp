#include "tnet/engine.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>
#include <string>

namespace tnet {

void validate(const MaterialSpec& spec) {
  if (spec.networks.empty()) throw std::invalid_argument("material needs at least one network");
  bool has_yeoh = false;
  for (const auto& n : spec.networks) {
    validate(n.model);
    validate(n.kinetics);
    has_yeoh = has_yeoh || std::holds_alternative<YeohIso>(n.model);
  }
  if (has_yeoh && !spec.volumetric)
    throw std::invalid_argument("a volumetric response is required when a Yeoh network is present");
  if (!has_yeoh && spec.volumetric)
    throw std::invalid_argument("a volumetric response is only allowed with Yeoh networks");
  if (spec.volumetric) validate(*spec.volumetric);
}

bool needs_spectrum(const MaterialSpec& spec) {
  for (const auto& n : spec.networks)
    if (std::holds_alternative<OgdenHill>(n.model)) return true;
  return false;
}

namespace {

DefState prepared_state(const MaterialSpec& spec, const Tensor2& F, double t, double T) {
  DefState s = make_state(F, t, T);
  if (needs_spectrum(spec)) ensure_spectrum(s);
  return s;
}

// H + gamma0 A(reference): the original network is a network born at the
// undeformed reference configuration.
KernelTerms effective_history(const NetworkHistory& h, const ModelSpec& model) {
  KernelTerms eff = h.H;
  eff.axpy(h.gamma0, kernel_A(model, DefState{}));
  return eff;
}

StressResult assemble(const MaterialState& state, const MaterialSpec& spec, const DefState& now,
                      const std::vector<KernelTerms>* newest, const std::vector<double>* weights) {
  StressResult r;
  for (std::size_t n = 0; n < spec.networks.size(); ++n) {
    const ModelSpec& model = spec.networks[n].model;
    const KernelB b = kernel_B(model, now);
    const KernelTerms eff = effective_history(state.networks[n], model);
    r.sigma += b.stress(eff);
    r.tangent += b.tangent(eff);
    if (newest && (*weights)[n] != 0.0) r.tangent += (-0.5 * (*weights)[n]) * b.tangent((*newest)[n]);
  }
  if (spec.volumetric) {
    r.sigma += volumetric_stress(*spec.volumetric, now.J);
    r.tangent += volumetric_tangent(*spec.volumetric, now.J);
  }
  return r;
}

struct StepWork {
  MaterialState next;
  std::vector<KernelTerms> newest;  // A at the step end, per network
  std::vector<double> w;
};

StepWork advance(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_next,
                 double T_next, double dt, bool keep_newest) {
  if (state.networks.size() != spec.networks.size())
    throw std::invalid_argument("state does not match material: network count differs");
  StepWork work;
  work.next.networks = state.networks;
  work.next.last = prepared_state(spec, F_next, state.last.t + dt, T_next);
  work.newest.resize(spec.networks.size());
  work.w.assign(spec.networks.size(), 0.0);

  for (std::size_t n = 0; n < spec.networks.size(); ++n) {
    const NetworkSpec& net = spec.networks[n];
    const SurvivalUpdate u = survival(net.kinetics, state.last.T, T_next, dt);
    work.w[n] = u.w;
    const bool frozen = (u.w == 0.0 && u.e == 1.0);
    if (frozen && !keep_newest) continue;
    KernelTerms a_new = kernel_A(net.model, work.next.last);
    if (!frozen) {
      NetworkHistory& h = work.next.networks[n];
      const KernelTerms a_old = kernel_A(net.model, state.last);
      h.H.scale(u.e);
      h.H.axpy(0.5 * u.w, a_old);
      h.H.axpy(0.5 * u.w, a_new);
      h.gamma0 = update_original_fraction(h.gamma0, u);
    }
    work.newest[n] = std::move(a_new);
  }
  return work;
}

}  // namespace

MaterialState init_state(const MaterialSpec& spec, double T0, const Tensor2& F0, double t0) {
  validate(spec);
  MaterialState s;
  s.last = prepared_state(spec, F0, t0, T0);
  for (const auto& n : spec.networks) s.networks.push_back({1.0, zero_terms(n.model)});
  return s;
}

MaterialState step(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_next,
                   double T_next, double dt) {
  return advance(state, spec, F_next, T_next, dt, false).next;
}

StressResult evaluate(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_now,
                      double T_now) {
  if (F_now == state.last.F) return assemble(state, spec, state.last, nullptr, nullptr);
  const DefState now = prepared_state(spec, F_now, state.last.t, T_now);
  return assemble(state, spec, now, nullptr, nullptr);
}

StressResult evaluate(const MaterialState& state, const MaterialSpec& spec) {
  return assemble(state, spec, state.last, nullptr, nullptr);
}

SymTensor2 network_stress(const MaterialState& state, const MaterialSpec& spec, std::size_t index,
                          const Tensor2& F_now) {
  const ModelSpec& model = spec.networks.at(index).model;
  const DefState now = (F_now == state.last.F) ? state.last
                                              : prepared_state(spec, F_now, state.last.t, state.last.T);
  return kernel_B(model, now, false).stress(effective_history(state.networks[index], model));
}

TrialResult trial_step(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_next,
                       double T_next, double dt, TangentMode mode) {
  const bool algorithmic = (mode == TangentMode::Algorithmic);
  StepWork work = advance(state, spec, F_next, T_next, dt, algorithmic);
  TrialResult r;
  r.response = algorithmic ? assemble(work.next, spec, work.next.last, &work.newest, &work.w)
                           : assemble(work.next, spec, work.next.last, nullptr, nullptr);
  r.state = std::move(work.next);
  return r;
}

// ---- serialization ---------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'T', 'N', 'E', 'T', 'S', 'T', 'A', 'T'};

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* c = static_cast<const std::uint8_t*>(p);
    out_.insert(out_.end(), c, c + n);
  }
  void u32(std::uint32_t x) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  }
  void f64(double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  void need(std::size_t n) const {
    if (pos_ + n > in_.size()) throw std::runtime_error("state blob is truncated");
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= std::uint32_t(in_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return x;
  }
  double f64() {
    need(8);
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= std::uint64_t(in_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return std::bit_cast<double>(x);
  }
  bool matches(const char* magic, std::size_t n) {
    need(n);
    const bool ok = std::memcmp(in_.data() + pos_, magic, n) == 0;
    pos_ += n;
    return ok;
  }
  bool at_end() const { return pos_ == in_.size(); }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize(const MaterialState& state, const MaterialSpec& spec) {
  if (state.networks.size() != spec.networks.size())
    throw std::invalid_argument("serialize: state does not match material");
  Writer w;
  w.bytes(kMagic, sizeof kMagic);
  w.u32(kStateFormatVersion);
  w.u32(static_cast<std::uint32_t>(state.networks.size()));
  for (std::size_t n = 0; n < state.networks.size(); ++n) {
    const KernelTerms& h = state.networks[n].H;
    w.u32(static_cast<std::uint32_t>(spec.networks[n].model.index()));
    w.u32(static_cast<std::uint32_t>(h.scalars.size()));
    w.u32(static_cast<std::uint32_t>(h.rank2.size()));
    w.u32(static_cast<std::uint32_t>(h.rank4.size()));
    w.u32(static_cast<std::uint32_t>(h.rank6.size()));
    w.f64(state.networks[n].gamma0);
    for (double x : h.scalars) w.f64(x);
    for (const auto& t : h.rank2)
      for (double x : t.v) w.f64(x);
    for (const auto& t : h.rank4)
      for (double x : t.v) w.f64(x);
    for (const auto& t : h.rank6)
      for (double x : t.v) w.f64(x);
  }
  for (double x : state.last.F.v) w.f64(x);
  w.f64(state.last.t);
  w.f64(state.last.T);
  return w.take();
}

MaterialState deserialize(std::span<const std::uint8_t> bytes, const MaterialSpec& spec) {
  Reader r(bytes);
  if (!r.matches(kMagic, sizeof kMagic)) throw std::runtime_error("state blob has a bad magic tag");
  const std::uint32_t version = r.u32();
  if (version != kStateFormatVersion)
    throw std::runtime_error("unsupported state format version " + std::to_string(version));
  const std::uint32_t count = r.u32();
  if (count != spec.networks.size())
    throw std::runtime_error("state blob has " + std::to_string(count) +
                             " networks, material has " + std::to_string(spec.networks.size()));
  MaterialState s;
  for (std::uint32_t n = 0; n < count; ++n) {
    const ModelSpec& model = spec.networks[n].model;
    if (r.u32() != model.index())
      throw std::runtime_error("state blob network " + std::to_string(n) + " has a different model");
    NetworkHistory h;
    h.H = zero_terms(model);
    const std::uint32_t ns = r.u32(), n2 = r.u32(), n4 = r.u32(), n6 = r.u32();
    if (ns != h.H.scalars.size() || n2 != h.H.rank2.size() || n4 != h.H.rank4.size() ||
        n6 != h.H.rank6.size())
      throw std::runtime_error("state blob network " + std::to_string(n) + " has a different shape");
    h.gamma0 = r.f64();
    for (auto& x : h.H.scalars) x = r.f64();
    for (auto& t : h.H.rank2)
      for (auto& x : t.v) x = r.f64();
    for (auto& t : h.H.rank4)
      for (auto& x : t.v) x = r.f64();
    for (auto& t : h.H.rank6)
      for (auto& x : t.v) x = r.f64();
    s.networks.push_back(std::move(h));
  }
  Tensor2 F;
  for (auto& x : F.v) x = r.f64();
  const double t = r.f64();
  const double T = r.f64();
  if (!r.at_end()) throw std::runtime_error("state blob has trailing bytes");
  s.last = prepared_state(spec, F, t, T);
  return s;
}

}  // namespace tnet
