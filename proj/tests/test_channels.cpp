// Copyright 2026 The vqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "vqft/channels.hpp"
#include "vqft/gates.hpp"

using namespace vqft;
using vqft::testing::random_density;

namespace {

DensityMatrix random_rho(SplitStream& rs) { return DensityMatrix{random_density(rs)}; }

void check_cptp_output(const DensityMatrix& out) {
  CHECK(out.trace_error() < 1e-10);
  CHECK(out.hermiticity() < 1e-10);
  CHECK(out.min_eigenvalue() > -1e-10);
}

}  // namespace

TEST_CASE("depolarizing channel basic behavior") {
  SplitStream rs(50, 0);
  const DensityMatrix rho = random_rho(rs);

  CHECK(max_abs_diff(depolarize(rho, 0.0).mat, rho.mat) == 0.0);

  CMatrix mixed = CMatrix::identity(4);
  mixed *= 0.25;
  CHECK(max_abs_diff(depolarize(rho, 1.0).mat, mixed) < 1e-15);
  // the maximally mixed state is a fixed point
  CHECK(max_abs_diff(depolarize(DensityMatrix{mixed}, 0.37).mat, mixed) < 1e-15);
  CHECK(max_abs_diff(depolarize(DensityMatrix{mixed}, 0.37, 0).mat, mixed) < 1e-15);

  CHECK_THROWS_AS(depolarize(rho, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(depolarize(rho, 1.1, 0), std::invalid_argument);
}

TEST_CASE("single-wire depolarizing keeps the other marginal") {
  SplitStream rs(51, 0);
  for (int it = 0; it < 10; ++it) {
    const DensityMatrix rho = random_rho(rs);
    const DensityMatrix out = depolarize(rho, 0.3, 0);
    check_cptp_output(out);
    // wire 1 marginal untouched, wire 0 marginal pulled toward I/2
    CHECK(max_abs_diff(partial_trace(out.mat, 0), partial_trace(rho.mat, 0)) < 1e-12);
    const CMatrix m_in = partial_trace(rho.mat, 1);
    const CMatrix m_out = partial_trace(out.mat, 1);
    CMatrix half = CMatrix::identity(2);
    half *= 0.5;
    CHECK(max_abs_diff(m_out, 0.7 * m_in + 0.3 * half) < 1e-12);
  }
}

TEST_CASE("depolarizing contracts toward the maximally mixed state") {
  SplitStream rs(52, 0);
  CMatrix mixed = CMatrix::identity(4);
  mixed *= 0.25;
  for (int it = 0; it < 20; ++it) {
    const DensityMatrix rho = random_rho(rs);
    const double eps = rs.next_uniform();
    const DensityMatrix out = depolarize(rho, eps);
    CHECK(frobenius_norm(out.mat - mixed) <=
          (1.0 - eps) * frobenius_norm(rho.mat - mixed) + 1e-12);
  }
}

TEST_CASE("Kraus form of depolarizing equals the affine form") {
  SplitStream rs(53, 0);
  const KrausChannel one = depolarizing_kraus(0.17, 1);
  const KrausChannel two = depolarizing_kraus(0.0025, 2);
  CHECK(one.completeness_error() < 1e-12);
  CHECK(two.completeness_error() < 1e-12);
  for (int it = 0; it < 50; ++it) {
    const DensityMatrix rho = random_rho(rs);
    const int wire = it % 2;
    CHECK(max_abs_diff(apply_channel(rho, one, wire).mat, depolarize(rho, 0.17, wire).mat) <
          1e-12);
    CHECK(max_abs_diff(apply_channel(rho, two).mat, depolarize(rho, 0.0025).mat) < 1e-12);
  }
}

TEST_CASE("excited_population limits and calibration value") {
  // hf/kT -> 0 gives the symmetric point 1/2
  CHECK(excited_population(1e-3, 1e6) == doctest::Approx(0.5).epsilon(1e-9));
  // Boltzmann suppression at high frequency
  CHECK(excited_population(1e15, 15.0) < 1e-200);
  // 4.61 GHz at 15 mK (direct evaluation oracle)
  CHECK(excited_population(4.61e9, 15.0) ==
        doctest::Approx(3.9291438249425733e-07).epsilon(1e-9));
  CHECK_THROWS_AS(excited_population(-1.0, 15.0), std::invalid_argument);
  CHECK_THROWS_AS(excited_population(4.61e9, 0.0), std::invalid_argument);
}

TEST_CASE("thermal_probs reproduces the calibration-derived quantities") {
  // T1 = 316.85 us, T2 = 311.90 us, tg = 60 ns, pe from 4.61 GHz @ 15 mK
  ThermalParams p{316.85e-6, 311.90e-6, 60e-9, 3.9291438249425733e-07};
  const ThermalProbs q = thermal_probs(p);
  CHECK(q.e_t1 == doctest::Approx(0.9998106538758498).epsilon(1e-12));
  CHECK(q.e_t2 == doctest::Approx(0.9998076491526464).epsilon(1e-12));
  CHECK(q.p_reset == doctest::Approx(0.00018934612415022478).epsilon(1e-9));
  CHECK(q.p_z == doctest::Approx(1.5023616017011486e-06).epsilon(1e-9));
  CHECK(q.p_r0 == doctest::Approx(0.00018934604975340933).epsilon(1e-9));
  CHECK(q.p_r1 == doctest::Approx(7.439681544816656e-11).epsilon(1e-6));
  CHECK(q.p_id + q.p_z + q.p_r0 + q.p_r1 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("thermal_probs edge cases and validation") {
  // zero gate time: identity channel
  const ThermalProbs idp = thermal_probs(ThermalParams{1e-4, 1e-4, 0.0, 0.1});
  CHECK(idp.p_reset == 0.0);
  CHECK(idp.p_z == 0.0);
  CHECK(idp.p_id == 1.0);

  // T2 = 2*T1 gives a negative p_z; the probabilities still sum to one
  const ThermalProbs tp = thermal_probs(ThermalParams{1e-4, 2e-4, 5e-5, 0.0});
  CHECK(tp.p_z < 0.0);
  CHECK(tp.p_id + tp.p_z + tp.p_r0 + tp.p_r1 == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(thermal_probs(ThermalParams{-1.0, 1e-4, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(thermal_probs(ThermalParams{1e-4, 3e-4, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(thermal_probs(ThermalParams{1e-4, 1e-4, -1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(thermal_probs(ThermalParams{1e-4, 1e-4, 0.0, 1.5}), std::invalid_argument);
}

TEST_CASE("thermal_kraus special channels") {
  // p_id = 1: identity map
  {
    const KrausChannel ch = thermal_kraus(ThermalProbs{1, 1, 0, 0, 0, 0, 1});
    SplitStream rs(54, 0);
    const DensityMatrix rho = random_rho(rs);
    CHECK(max_abs_diff(apply_channel(rho, ch, 0).mat, rho.mat) < 1e-12);
  }
  // p_z = 1: pure dephasing rho -> Z rho Z
  {
    const KrausChannel ch = thermal_kraus(ThermalProbs{1, 1, 0, 1, 0, 0, 0});
    SplitStream rs(55, 0);
    const DensityMatrix rho = random_rho(rs);
    const CMatrix z4 = embed(pauli_z(), 1);
    CHECK(max_abs_diff(apply_channel(rho, ch, 1).mat, (z4 * rho.mat * adjoint(z4))) < 1e-12);
  }
  // p_reset = 1 with p_e = 0: everything collapses to |0> on that wire
  {
    const KrausChannel ch = thermal_kraus(ThermalProbs{0, 0, 1, 0, 1, 0, 0});
    SplitStream rs(56, 0);
    const DensityMatrix rho = random_rho(rs);
    const DensityMatrix out = apply_channel(rho, ch, 0);
    const CMatrix kept = partial_trace(out.mat, 0);
    CMatrix wire0(2);
    wire0.at(0, 0) = 1.0;
    CHECK(max_abs_diff(partial_trace(out.mat, 1), wire0) < 1e-12);
    CHECK(std::abs(trace(kept) - cplx(1.0)) < 1e-12);
  }
}

TEST_CASE("thermal channel completeness from Eq-style probabilities") {
  SplitStream rs(57, 0);
  for (int it = 0; it < 20; ++it) {
    const double t1 = 1e-5 + rs.next_uniform() * 1e-3;
    const double t2 = t1 * (0.2 + 1.8 * rs.next_uniform());  // spans T2 <= T1 and T2 > T1
    const double tg = rs.next_uniform() * 1e-6;
    const double pe = rs.next_uniform() * 0.5;
    const KrausChannel ch = thermal_kraus(thermal_probs(ThermalParams{t1, t2, tg, pe}));
    CHECK(ch.completeness_error() < 1e-12);
  }
}

TEST_CASE("thermal map: population decay and coherence decay match the exponentials") {
  const double t1 = 2e-4, tg = 7e-5, pe = 0.02;
  for (double t2 : {1.2e-4, 3.5e-4}) {  // second case exercises the T2 > T1 branch
    const KrausChannel ch = thermal_kraus(thermal_probs(ThermalParams{t1, t2, tg, pe}));
    // |1><1| populations decay toward equilibrium with e^{-t/T1}
    DensityMatrix exc;
    exc.mat.at(3, 3) = 1.0;  // qubit 1 excited, qubit 0 excited
    const DensityMatrix out = apply_channel(exc, ch, 1);
    const double expect_p1 = std::exp(-tg / t1) + pe * (1.0 - std::exp(-tg / t1));
    CHECK(partial_trace(out.mat, 0).at(1, 1).real() == doctest::Approx(expect_p1).epsilon(1e-12));
    // coherences decay with e^{-t/T2}
    DensityMatrix coh;
    coh.mat.at(0, 0) = 0.5;
    coh.mat.at(0, 1) = 0.5;
    coh.mat.at(1, 0) = 0.5;
    coh.mat.at(1, 1) = 0.5;  // |+> on qubit 1
    const DensityMatrix outc = apply_channel(coh, ch, 1);
    CHECK(outc.mat.at(0, 1).real() == doctest::Approx(0.5 * std::exp(-tg / t2)).epsilon(1e-12));
  }
}

TEST_CASE("thermal relaxation with p_e = 0 drains the excited state monotonically") {
  const double t1 = 3e-4;
  DensityMatrix exc;
  exc.mat.at(2, 2) = 1.0;  // qubit 0 in |1>
  double prev = 1.0;
  for (double tg : {0.0, t1, 10.0 * t1}) {
    const KrausChannel ch = thermal_kraus(thermal_probs(ThermalParams{t1, t1, tg, 0.0}));
    const DensityMatrix out = apply_channel(exc, ch, 0);
    const double p1 = partial_trace(out.mat, 1).at(1, 1).real();
    CHECK(p1 <= prev + 1e-12);
    prev = p1;
  }
  CHECK(prev < 1e-4);  // after 10*T1 essentially relaxed to |0>
}

TEST_CASE("crosstalk unitary phase") {
  CHECK(max_abs_diff(crosstalk_unitary(0.0, 660e-9), CMatrix::identity(4)) < 1e-15);

  // zeta = 1.5e5 Hz for 660 ns: phase angle 2*pi*0.099
  const CMatrix u = crosstalk_unitary(1.5e5, 660e-9);
  CHECK(u.at(3, 3).real() == doctest::Approx(std::cos(0.6220353454107791)).epsilon(1e-12));
  CHECK(u.at(3, 3).imag() == doctest::Approx(-std::sin(0.6220353454107791)).epsilon(1e-12));

  // half period gives CZ
  const CMatrix cz = crosstalk_unitary(0.5, 1.0);
  CHECK(std::abs(cz.at(3, 3) - cplx(-1.0)) < 1e-12);

  // diagonal, unitary, commutes with cphase
  SplitStream rs(58, 0);
  for (int it = 0; it < 10; ++it) {
    const CMatrix x = crosstalk_unitary(rs.next_uniform() * 1e6, rs.next_uniform() * 1e-6);
    CHECK(vqft::testing::is_unitary(x));
    const CMatrix cp = cphase(rs.next_angle());
    CHECK(max_abs_diff(x * cp, cp * x) < 1e-12);
  }
}

TEST_CASE("every channel preserves trace, Hermiticity and positivity") {
  SplitStream rs(59, 0);
  const KrausChannel thermal =
      thermal_kraus(thermal_probs(ThermalParams{316.85e-6, 311.90e-6, 660e-9, 3.93e-7}));
  const KrausChannel thermal_t2 =
      thermal_kraus(thermal_probs(ThermalParams{315.50e-6, 409.37e-6, 660e-9, 1.77e-7}));
  const KrausChannel dep1 = depolarizing_kraus(0.01, 1);
  const KrausChannel dep2 = depolarizing_kraus(0.01, 2);
  for (int it = 0; it < 100; ++it) {
    const DensityMatrix rho = random_rho(rs);
    check_cptp_output(apply_channel(rho, thermal, it % 2));
    check_cptp_output(apply_channel(rho, thermal_t2, it % 2));
    check_cptp_output(apply_channel(rho, dep1, it % 2));
    check_cptp_output(apply_channel(rho, dep2));
    check_cptp_output(depolarize(rho, 0.3, it % 2));
    check_cptp_output(depolarize(rho, 0.3));
  }
}

TEST_CASE("apply_channel rejects trace-breaking operator sets") {
  // a deliberately broken "channel" assembled without the checked factory
  KrausChannel broken;
  broken.arity = 1;
  CMatrix k = CMatrix::identity(2);
  k *= 0.9;
  broken.ops = {k};
  SplitStream rs(60, 0);
  CHECK_THROWS_AS(apply_channel(random_rho(rs), broken, 0), std::runtime_error);
  CHECK_THROWS_AS(KrausChannel::make_checked({k}, 1), std::invalid_argument);
}
