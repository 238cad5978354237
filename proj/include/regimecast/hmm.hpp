#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

namespace regimecast {

using Matrix = std::vector<std::vector<double>>;
using EmissionSequence = std::vector<int>;  // symbol indices in [0, n_symbols)
using StatePath = std::vector<int>;         // state indices in [0, n_states)

// Discrete-time hidden Markov model λ = (Π, A, B).
struct DtHmm {
    int n_states = 0;
    int n_symbols = 0;
    std::vector<double> pi;  // N
    Matrix trans;            // N×N, rows stochastic
    Matrix emit;             // N×M, rows stochastic

    // Throws std::invalid_argument unless every row is a probability
    // distribution within 1e-9 and dimensions are consistent.
    void validate() const;

    // Each probability row drawn uniformly from the simplex; deterministic per seed.
    static DtHmm random(int n_states, int n_symbols, std::uint64_t seed);
};

struct ForwardLattice {
    Matrix log_alpha;  // T×N
    double log_likelihood = 0.0;
};

struct BackwardLattice {
    Matrix log_beta;  // T×N, final row all zero
};

// E-step posteriors: gamma[t][i] = p(q_t = i | O), xi[t][i][j] = p(q_t = i, q_{t+1} = j | O).
struct Posteriors {
    Matrix gamma;            // T×N
    std::vector<Matrix> xi;  // (T-1)×N×N
    double log_likelihood = 0.0;
};

struct TrainReport {
    std::vector<double> log_likelihood_per_iteration;
    int iterations_run = 0;
};

struct TrainOptions {
    int max_iters = 100;
    double tol = 1e-7;  // early stop when improvement drops below; <= 0 runs all iterations
};

// Log-domain forward recursion; log_likelihood = logsumexp of the last row.
ForwardLattice forward(const DtHmm& model, const EmissionSequence& obs);

BackwardLattice backward(const DtHmm& model, const EmissionSequence& obs);

// Most likely state path and its log joint probability log p(q, O | λ).
// Ties break toward the lower state index at every backpointer decision.
std::pair<double, StatePath> viterbi(const DtHmm& model, const EmissionSequence& obs);

Posteriors state_posteriors(const DtHmm& model, const EmissionSequence& obs);

// EM re-estimation accumulating expected counts over all sequences.
std::pair<DtHmm, TrainReport> baum_welch(const DtHmm& model,
                                         const std::vector<EmissionSequence>& sequences,
                                         const TrainOptions& options = {});

std::pair<StatePath, EmissionSequence> generate(const DtHmm& model, int length,
                                                std::uint64_t seed);

// JSON round trip ({"n_states", "n_symbols", "pi", "trans", "emit"}, row-major).
void save_hmm(const DtHmm& model, const std::filesystem::path& path);
DtHmm load_hmm(const std::filesystem::path& path);  // throws CorruptModelError

// Splits one sequence into consecutive chunks of at most max_len symbols.
std::vector<EmissionSequence> chunk_sequence(const EmissionSequence& seq, int max_len);

double logsumexp(const std::vector<double>& xs);

}  // namespace regimecast
