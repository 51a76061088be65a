#include "cosep/count_tables.hpp"

#include <stdexcept>

#include "cosep/enumeration.hpp"

namespace cosep {

void CountTables::build_cograph(int nmax) {
    if (cograph_max() >= nmax) return;
    l_ = hierarchy_counts(nmax);
}

void CountTables::build_schroder(int nmax) {
    if (schroder_max() >= nmax) return;
    s_ = schroder_counts(nmax);
}

mpz_class CountTables::block_table(int n, int j) const {
    if (j < 0 || j > 2) throw std::invalid_argument("block_table: j must be in {0,1,2}");
    if (n == 0) return j == 0 ? 1 : 0;
    if (n == 1) return j == 2 ? 0 : 1;
    const mpz_class& ln = l_.at(n);
    return j == 2 ? ln : mpz_class(2 * ln);
}

mpz_class CountTables::seq_table(int n, int j) const {
    if (j < 0 || j > 2) throw std::invalid_argument("seq_table: j must be in {0,1,2}");
    if (n == 0) return j == 0 ? 1 : 0;
    if (n == 1) return j == 2 ? 0 : 1;
    const mpz_class& sn = s_.at(n);
    return j == 2 ? sn : mpz_class(2 * sn);
}

}  // namespace cosep
