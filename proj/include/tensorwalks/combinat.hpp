#pragma once

// Partitions, multipartitions and the counting functions built on them.

#include <string>
#include <vector>

#include "tensorwalks/exact.hpp"

namespace tensorwalks {

// Weakly decreasing positive parts; {} is the partition of 0.
using Partition = std::vector<int>;
// One partition per colour; colours indexed 0..r-1.
using MultiPartition = std::vector<Partition>;

int partition_size(const Partition& p);
// Number of parts equal to 1.
int fixed_points(const Partition& p);
// Multiplicity of part j.
int part_multiplicity(const Partition& p, int j);

// All partitions of n, reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);
// All r-tuples of partitions of total size n; ((1^n), (), ..., ()) first,
// the rest ordered by the size composition then component-wise reverse lex.
std::vector<MultiPartition> multipartitions_of(int n, int r);

// "(3,1)", "()" for the empty partition.
std::string partition_label(const Partition& p);
// "((1),(1),())"
std::string multipartition_label(const MultiPartition& a);

// Stirling number of the second kind by the alternating sum
// (1/l!) sum_j (-1)^{l-j} C(l,j) j^k.
Count stirling2(unsigned k, unsigned l);
Count bell(unsigned n);

// Semistandard tableaux of shape lam with n-l zeros and one each of 1..l.
Count kostka_hook_content(const Partition& lam, int l);

// Permutations of n points with exactly m fixed points.
Count rencontres(int n, int m);

// prod_j j^{p_j} p_j!
Count z_lambda(const Partition& lam);
// r^{total parts} prod_i z_{alpha^(i)}
Count z_multipartition(const MultiPartition& alpha, int r);

// k! / prod parts!; throws UsageError when the parts do not sum to k.
Count multinomial(int k, const std::vector<int>& parts);

// Set partitions of a 2k-set into s nonempty blocks of even size.
Count even_block_partitions(int k, int s);

}  // namespace tensorwalks
