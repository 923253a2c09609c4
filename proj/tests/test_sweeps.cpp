#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "m1n/sweeps.hpp"

using namespace m1n;
using sweeps::Exec;
using sweeps::SweepResult;

namespace {

void check_agreement(const SweepResult& serial, const SweepResult& parallel) {
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.failures == parallel.failures);
    CHECK(serial.first_failure == parallel.first_failure);
}

} // namespace

TEST_CASE("serial and parallel kernels agree") {
    check_agreement(sweeps::certificate_pairing_sweep(12, Exec::serial),
                    sweeps::certificate_pairing_sweep(12, Exec::parallel));
    check_agreement(sweeps::sigma_identity_sweep(3000, Exec::serial),
                    sweeps::sigma_identity_sweep(3000, Exec::parallel));
    check_agreement(sweeps::sigma_order_oracle_sweep(40, Exec::serial),
                    sweeps::sigma_order_oracle_sweep(40, Exec::parallel));
    check_agreement(sweeps::decompose_sweep(4, 200, kDefaultSeed, Exec::serial),
                    sweeps::decompose_sweep(4, 200, kDefaultSeed, Exec::parallel));
    check_agreement(sweeps::monodromy_sweep(25, Exec::serial),
                    sweeps::monodromy_sweep(25, Exec::parallel));
    check_agreement(sweeps::reduction_sweep(60, Exec::serial),
                    sweeps::reduction_sweep(60, Exec::parallel));
    check_agreement(sweeps::pullback_agreement_sweep(5, 4, Exec::serial),
                    sweeps::pullback_agreement_sweep(5, 4, Exec::parallel));
    check_agreement(sweeps::pulled_back_certificate_sweep(5, 4, Exec::serial),
                    sweeps::pulled_back_certificate_sweep(5, 4, Exec::parallel));
    check_agreement(sweeps::sym_implication_sweep(3, 5, 400, kDefaultSeed, Exec::serial),
                    sweeps::sym_implication_sweep(3, 5, 400, kDefaultSeed, Exec::parallel));
    check_agreement(sweeps::grr_coherence_sweep(64, kDefaultSeed, Exec::serial),
                    sweeps::grr_coherence_sweep(64, kDefaultSeed, Exec::parallel));
}

TEST_CASE("sweeps pass at reduced bounds") {
    CHECK(sweeps::certificate_pairing_sweep(12, Exec::parallel).ok());
    CHECK(sweeps::ray_family_sweep(12).ok());
    CHECK(sweeps::sigma_identity_sweep(3000, Exec::parallel).ok());
    CHECK(sweeps::sigma_order_oracle_sweep(40, Exec::parallel).ok());
    CHECK(sweeps::decompose_sweep(4, 200, kDefaultSeed, Exec::parallel).ok());
    CHECK(sweeps::monodromy_sweep(25, Exec::parallel).ok());
    CHECK(sweeps::automorphism_matrix_check().ok());
    CHECK(sweeps::reduction_sweep(60, Exec::parallel).ok());
    CHECK(sweeps::pullback_agreement_sweep(5, 4, Exec::parallel).ok());
    CHECK(sweeps::pulled_back_certificate_sweep(5, 4, Exec::parallel).ok());
    CHECK(sweeps::sym_implication_sweep(3, 5, 400, kDefaultSeed, Exec::parallel).ok());
    CHECK(sweeps::sym_tables_check(2, 10).ok());
    CHECK(sweeps::grr_coherence_sweep(64, kDefaultSeed, Exec::parallel).ok());
    CHECK(sweeps::reid_tai_fixture_check().ok());
}

TEST_CASE("seeded sweeps are reproducible") {
    SweepResult a = sweeps::sym_implication_sweep(3, 4, 300, 42, Exec::parallel);
    SweepResult b = sweeps::sym_implication_sweep(3, 4, 300, 42, Exec::parallel);
    CHECK(a.checked == b.checked);
    CHECK(a.failures == b.failures);

    SweepResult c = sweeps::grr_coherence_sweep(50, 42, Exec::parallel);
    SweepResult d = sweeps::grr_coherence_sweep(50, 42, Exec::parallel);
    CHECK(c.checked == d.checked);
    CHECK(c.failures == d.failures);
}
