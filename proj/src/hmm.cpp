#include "regimecast/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "regimecast/errors.hpp"
#include "regimecast/rng.hpp"

namespace regimecast {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kRowTol = 1e-9;

double safe_log(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

void check_row(const std::vector<double>& row, const char* what) {
    double sum = 0.0;
    for (double p : row) {
        if (!(p >= 0.0 && p <= 1.0 + kRowTol))
            throw std::invalid_argument(std::string(what) + " entry outside [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kRowTol)
        throw std::invalid_argument(std::string(what) + " row does not sum to 1");
}

void check_obs(const DtHmm& model, const EmissionSequence& obs) {
    if (obs.empty()) throw std::invalid_argument("empty emission sequence");
    for (int s : obs)
        if (s < 0 || s >= model.n_symbols)
            throw std::invalid_argument("emission symbol out of range: " + std::to_string(s));
}

Matrix log_of(const Matrix& m) {
    Matrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = safe_log(m[i][j]);
    }
    return out;
}

}  // namespace

double logsumexp(const std::vector<double>& xs) {
    double mx = kNegInf;
    for (double x : xs) mx = std::max(mx, x);
    if (mx == kNegInf) return kNegInf;
    double sum = 0.0;
    for (double x : xs) sum += std::exp(x - mx);
    return mx + std::log(sum);
}

void DtHmm::validate() const {
    if (n_states < 1 || n_symbols < 1)
        throw std::invalid_argument("model needs at least one state and one symbol");
    if (static_cast<int>(pi.size()) != n_states ||
        static_cast<int>(trans.size()) != n_states ||
        static_cast<int>(emit.size()) != n_states)
        throw std::invalid_argument("parameter dimensions do not match n_states");
    check_row(pi, "pi");
    for (const auto& row : trans) {
        if (static_cast<int>(row.size()) != n_states)
            throw std::invalid_argument("trans is not N×N");
        check_row(row, "trans");
    }
    for (const auto& row : emit) {
        if (static_cast<int>(row.size()) != n_symbols)
            throw std::invalid_argument("emit is not N×M");
        check_row(row, "emit");
    }
}

DtHmm DtHmm::random(int n_states, int n_symbols, std::uint64_t seed) {
    if (n_states < 1 || n_symbols < 1)
        throw std::invalid_argument("n_states and n_symbols must be positive");
    Rng rng(seed);
    DtHmm m;
    m.n_states = n_states;
    m.n_symbols = n_symbols;
    m.pi = rng.simplex(n_states);
    m.trans.reserve(n_states);
    m.emit.reserve(n_states);
    for (int i = 0; i < n_states; ++i) m.trans.push_back(rng.simplex(n_states));
    for (int i = 0; i < n_states; ++i) m.emit.push_back(rng.simplex(n_symbols));
    return m;
}

ForwardLattice forward(const DtHmm& model, const EmissionSequence& obs) {
    check_obs(model, obs);
    const int n = model.n_states;
    const int t_len = static_cast<int>(obs.size());
    const Matrix la = log_of(model.trans);
    const Matrix lb = log_of(model.emit);

    ForwardLattice out;
    out.log_alpha.assign(t_len, std::vector<double>(n, kNegInf));
    for (int i = 0; i < n; ++i)
        out.log_alpha[0][i] = safe_log(model.pi[i]) + lb[i][obs[0]];

    std::vector<double> terms(n);
    for (int t = 1; t < t_len; ++t) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) terms[j] = out.log_alpha[t - 1][j] + la[j][i];
            out.log_alpha[t][i] = lb[i][obs[t]] + logsumexp(terms);
        }
    }
    out.log_likelihood = logsumexp(out.log_alpha[t_len - 1]);
    return out;
}

BackwardLattice backward(const DtHmm& model, const EmissionSequence& obs) {
    check_obs(model, obs);
    const int n = model.n_states;
    const int t_len = static_cast<int>(obs.size());
    const Matrix la = log_of(model.trans);
    const Matrix lb = log_of(model.emit);

    BackwardLattice out;
    out.log_beta.assign(t_len, std::vector<double>(n, 0.0));  // β_T(i) = 1
    std::vector<double> terms(n);
    for (int t = t_len - 2; t >= 0; --t) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                terms[j] = la[i][j] + lb[j][obs[t + 1]] + out.log_beta[t + 1][j];
            out.log_beta[t][i] = logsumexp(terms);
        }
    }
    return out;
}

std::pair<double, StatePath> viterbi(const DtHmm& model, const EmissionSequence& obs) {
    check_obs(model, obs);
    const int n = model.n_states;
    const int t_len = static_cast<int>(obs.size());
    const Matrix la = log_of(model.trans);
    const Matrix lb = log_of(model.emit);

    Matrix vp(t_len, std::vector<double>(n, kNegInf));
    std::vector<std::vector<int>> back(t_len, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) vp[0][i] = safe_log(model.pi[i]) + lb[i][obs[0]];

    for (int t = 1; t < t_len; ++t) {
        for (int i = 0; i < n; ++i) {
            double best = kNegInf;
            int arg = 0;
            for (int j = 0; j < n; ++j) {
                double cand = vp[t - 1][j] + la[j][i];
                if (cand > best) {  // strict: earlier (lower) j wins ties
                    best = cand;
                    arg = j;
                }
            }
            vp[t][i] = best + lb[i][obs[t]];
            back[t][i] = arg;
        }
    }

    double best = kNegInf;
    int last = 0;
    for (int i = 0; i < n; ++i) {
        if (vp[t_len - 1][i] > best) {
            best = vp[t_len - 1][i];
            last = i;
        }
    }
    StatePath path(t_len);
    path[t_len - 1] = last;
    for (int t = t_len - 1; t > 0; --t) path[t - 1] = back[t][path[t]];
    return {best, path};
}

Posteriors state_posteriors(const DtHmm& model, const EmissionSequence& obs) {
    const auto fwd = forward(model, obs);
    const auto bwd = backward(model, obs);
    const int n = model.n_states;
    const int t_len = static_cast<int>(obs.size());
    const double ll = fwd.log_likelihood;
    const Matrix la = log_of(model.trans);
    const Matrix lb = log_of(model.emit);

    Posteriors post;
    post.log_likelihood = ll;
    post.gamma.assign(t_len, std::vector<double>(n, 0.0));
    for (int t = 0; t < t_len; ++t)
        for (int i = 0; i < n; ++i)
            post.gamma[t][i] = std::exp(fwd.log_alpha[t][i] + bwd.log_beta[t][i] - ll);

    post.xi.assign(t_len > 0 ? t_len - 1 : 0, Matrix(n, std::vector<double>(n, 0.0)));
    for (int t = 0; t + 1 < t_len; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                post.xi[t][i][j] = std::exp(fwd.log_alpha[t][i] + la[i][j] +
                                            lb[j][obs[t + 1]] + bwd.log_beta[t + 1][j] - ll);
    return post;
}

std::pair<DtHmm, TrainReport> baum_welch(const DtHmm& model,
                                         const std::vector<EmissionSequence>& sequences,
                                         const TrainOptions& options) {
    model.validate();
    if (sequences.empty()) throw std::invalid_argument("no training sequences");
    for (const auto& seq : sequences) check_obs(model, seq);
    if (options.max_iters < 1) throw std::invalid_argument("max_iters must be positive");

    const int n = model.n_states;
    const int m = model.n_symbols;
    DtHmm current = model;
    TrainReport report;

    for (int iter = 0; iter < options.max_iters; ++iter) {
        std::vector<double> pi_acc(n, 0.0);
        Matrix trans_num(n, std::vector<double>(n, 0.0));
        std::vector<double> trans_den(n, 0.0);
        Matrix emit_num(n, std::vector<double>(m, 0.0));
        std::vector<double> emit_den(n, 0.0);
        double total_ll = 0.0;

        for (const auto& seq : sequences) {
            const auto post = state_posteriors(current, seq);
            total_ll += post.log_likelihood;
            const int t_len = static_cast<int>(seq.size());
            for (int i = 0; i < n; ++i) pi_acc[i] += post.gamma[0][i];
            for (int t = 0; t + 1 < t_len; ++t) {
                for (int i = 0; i < n; ++i) {
                    trans_den[i] += post.gamma[t][i];
                    for (int j = 0; j < n; ++j) trans_num[i][j] += post.xi[t][i][j];
                }
            }
            for (int t = 0; t < t_len; ++t) {
                for (int i = 0; i < n; ++i) {
                    emit_num[i][seq[t]] += post.gamma[t][i];
                    emit_den[i] += post.gamma[t][i];
                }
            }
        }

        report.log_likelihood_per_iteration.push_back(total_ll);
        report.iterations_run = iter + 1;
        if (options.tol > 0.0 && iter > 0) {
            double improvement = total_ll - report.log_likelihood_per_iteration[iter - 1];
            if (improvement < options.tol) break;
        }

        // M-step. A state with no expected mass gets a uniform row.
        double pi_sum = 0.0;
        for (double p : pi_acc) pi_sum += p;
        for (int i = 0; i < n; ++i)
            current.pi[i] = pi_sum > 0.0 ? pi_acc[i] / pi_sum : 1.0 / n;
        for (int i = 0; i < n; ++i) {
            if (trans_den[i] > 0.0) {
                for (int j = 0; j < n; ++j) current.trans[i][j] = trans_num[i][j] / trans_den[i];
            } else {
                std::fill(current.trans[i].begin(), current.trans[i].end(), 1.0 / n);
            }
            if (emit_den[i] > 0.0) {
                for (int k = 0; k < m; ++k) current.emit[i][k] = emit_num[i][k] / emit_den[i];
            } else {
                std::fill(current.emit[i].begin(), current.emit[i].end(), 1.0 / m);
            }
        }
    }
    return {current, report};
}

std::pair<StatePath, EmissionSequence> generate(const DtHmm& model, int length,
                                                std::uint64_t seed) {
    model.validate();
    if (length < 1) throw std::invalid_argument("length must be positive");
    Rng rng(seed);
    StatePath path(length);
    EmissionSequence symbols(length);
    path[0] = rng.categorical(model.pi);
    symbols[0] = rng.categorical(model.emit[path[0]]);
    for (int t = 1; t < length; ++t) {
        path[t] = rng.categorical(model.trans[path[t - 1]]);
        symbols[t] = rng.categorical(model.emit[path[t]]);
    }
    return {path, symbols};
}

void save_hmm(const DtHmm& model, const std::filesystem::path& path) {
    model.validate();
    nlohmann::json j;
    j["n_states"] = model.n_states;
    j["n_symbols"] = model.n_symbols;
    j["pi"] = model.pi;
    j["trans"] = model.trans;
    j["emit"] = model.emit;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

DtHmm load_hmm(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorruptModelError("cannot read " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptModelError(path.string() + ": " + e.what());
    }
    DtHmm m;
    try {
        m.n_states = j.at("n_states").get<int>();
        m.n_symbols = j.at("n_symbols").get<int>();
        m.pi = j.at("pi").get<std::vector<double>>();
        m.trans = j.at("trans").get<Matrix>();
        m.emit = j.at("emit").get<Matrix>();
    } catch (const nlohmann::json::exception& e) {
        throw CorruptModelError(path.string() + ": " + e.what());
    }
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        throw CorruptModelError(path.string() + ": " + e.what());
    }
    return m;
}

std::vector<EmissionSequence> chunk_sequence(const EmissionSequence& seq, int max_len) {
    if (max_len < 1) throw std::invalid_argument("chunk length must be positive");
    std::vector<EmissionSequence> chunks;
    for (std::size_t start = 0; start < seq.size(); start += max_len) {
        std::size_t end = std::min(seq.size(), start + max_len);
        chunks.emplace_back(seq.begin() + start, seq.begin() + end);
    }
    return chunks;
}

}  // namespace regimecast
