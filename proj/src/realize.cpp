#include "planechroma/embeddings.hpp"
#include "planechroma/errors.hpp"
#include "rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

namespace planechroma {

namespace {

constexpr double kMinSeparation = 1e-3;
constexpr int kMaxVertices = 16;

struct Problem {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<double> target2;
    double scale = 1.0;
};

struct Evaluation {
    Eigen::VectorXd r;
    Eigen::MatrixXd J;
    double edge_sq = 0;
};

// Residuals: squared-length errors on edges, then a barrier on pairs closer than kMinSeparation.
Evaluation evaluate(const Problem& pb, const Eigen::VectorXd& z) {
    const int n = pb.n;
    const int m = static_cast<int>(pb.edges.size());
    const int pairs = n * (n - 1) / 2;
    Evaluation ev;
    ev.r = Eigen::VectorXd::Zero(m + pairs);
    ev.J = Eigen::MatrixXd::Zero(m + pairs, 2 * n);
    for (int k = 0; k < m; ++k) {
        auto [u, v] = pb.edges[k];
        double dx = z[2 * u] - z[2 * v], dy = z[2 * u + 1] - z[2 * v + 1];
        ev.r[k] = dx * dx + dy * dy - pb.target2[k];
        ev.edge_sq += ev.r[k] * ev.r[k];
        ev.J(k, 2 * u) = 2 * dx;
        ev.J(k, 2 * u + 1) = 2 * dy;
        ev.J(k, 2 * v) = -2 * dx;
        ev.J(k, 2 * v + 1) = -2 * dy;
    }
    const double sep2 = kMinSeparation * kMinSeparation * pb.scale * pb.scale;
    int row = m;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++row) {
            double dx = z[2 * u] - z[2 * v], dy = z[2 * u + 1] - z[2 * v + 1];
            double d2 = dx * dx + dy * dy;
            if (d2 >= sep2) continue;
            ev.r[row] = (sep2 - d2) / sep2;
            ev.J(row, 2 * u) = -2 * dx / sep2;
            ev.J(row, 2 * u + 1) = -2 * dy / sep2;
            ev.J(row, 2 * v) = 2 * dx / sep2;
            ev.J(row, 2 * v + 1) = 2 * dy / sep2;
        }
    return ev;
}

bool separated(const Problem& pb, const Eigen::VectorXd& z) {
    const double sep2 = kMinSeparation * kMinSeparation * pb.scale * pb.scale;
    for (int u = 0; u < pb.n; ++u)
        for (int v = u + 1; v < pb.n; ++v) {
            double dx = z[2 * u] - z[2 * v], dy = z[2 * u + 1] - z[2 * v + 1];
            if (dx * dx + dy * dy < sep2) return false;
        }
    return true;
}

std::optional<Eigen::VectorXd> one_restart(const Problem& pb, const RealizeConfig& cfg, int index) {
    detail::Stream rng(cfg.seed, static_cast<std::uint64_t>(index));
    Eigen::VectorXd z(2 * pb.n);
    for (int i = 0; i < 2 * pb.n; ++i) z[i] = rng.uniform(-2.0, 2.0) * pb.scale;
    if (pb.edges.empty()) return separated(pb, z) ? std::optional(z) : std::nullopt;

    double lambda = 1e-3;
    Evaluation ev = evaluate(pb, z);
    double cost = ev.r.squaredNorm();
    for (int it = 0; it < cfg.max_iterations; ++it) {
        if (ev.edge_sq < cfg.residual_tolerance && separated(pb, z)) return z;
        Eigen::MatrixXd A = ev.J.transpose() * ev.J;
        Eigen::VectorXd g = ev.J.transpose() * ev.r;
        bool improved = false;
        while (lambda < 1e12) {
            Eigen::MatrixXd M = A;
            for (int i = 0; i < M.rows(); ++i) M(i, i) += lambda * (1.0 + A(i, i));
            Eigen::VectorXd step = M.ldlt().solve(-g);
            Eigen::VectorXd trial = z + step;
            Evaluation tev = evaluate(pb, trial);
            double tcost = tev.r.squaredNorm();
            if (std::isfinite(tcost) && tcost < cost) {
                z = trial;
                ev = std::move(tev);
                double drop = cost - tcost;
                cost = tcost;
                lambda = std::max(lambda / 3, 1e-15);
                improved = true;
                if (step.norm() < cfg.step_tolerance && drop < cfg.step_tolerance) it = cfg.max_iterations;
                break;
            }
            lambda *= 4;
        }
        if (!improved) break;
    }
    if (ev.edge_sq < cfg.residual_tolerance && separated(pb, z)) return z;
    return std::nullopt;
}

std::optional<Embedding> solve(const Problem& pb, const RealizeConfig& cfg,
                               const std::function<bool(const Embedding&)>& accept) {
    if (cfg.attempts < 1) fail(ErrorCode::PreconditionViolated, "attempts must be at least 1");
    if (!(cfg.step_tolerance > 0) || !(cfg.residual_tolerance > 0))
        fail(ErrorCode::PreconditionViolated, "tolerances must be positive");
    if (pb.n > kMaxVertices) fail(ErrorCode::InputTooLarge, "realizer limited to 16 vertices");
    if (pb.n == 0) return Embedding{};

    const int workers = std::max(1, cfg.workers);
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::vector<std::optional<Embedding>> found(cfg.attempts);
    auto run = [&](int lane) {
        for (int i = lane; i < cfg.attempts; i += workers) {
            if (i > best.load()) return;
            auto z = one_restart(pb, cfg, i);
            if (!z) continue;
            Embedding emb;
            for (int v = 0; v < pb.n; ++v) emb.points.push_back({Scalar((*z)[2 * v]), Scalar((*z)[2 * v + 1])});
            if (!accept(emb)) continue;
            found[i] = std::move(emb);
            int cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    int b = best.load();
    if (b == std::numeric_limits<int>::max()) return std::nullopt;
    return found[b];
}

}  // namespace

std::optional<Embedding> realize(const SimpleGraph& g, const RealizeConfig& cfg) {
    if (g.n() > kMaxVertices) fail(ErrorCode::InputTooLarge, "realizer limited to 16 vertices");
    Problem pb;
    pb.n = g.n();
    pb.edges = g.edges();
    pb.target2.assign(pb.edges.size(), 1.0);
    const Tolerance tol = sampling_tolerance();
    return solve(pb, cfg, [&](const Embedding& e) { return verify(g, e, tol).is_udr; });
}

std::optional<Embedding> realize_bicolored(const BicoloredGraph& bg, const Scalar& d, const RealizeConfig& cfg) {
    if (!(d > 0)) fail(ErrorCode::NonpositiveD, "d must be positive");
    if (bg.n() > kMaxVertices) fail(ErrorCode::InputTooLarge, "realizer limited to 16 vertices");
    const double dd = d.convert_to<double>();
    Problem pb;
    pb.n = bg.n();
    pb.edges = bg.base().edges();
    for (auto lab : bg.labels()) pb.target2.push_back(lab == EdgeLabel::UNIT ? 1.0 : dd * dd);
    pb.scale = std::max(1.0, dd);
    const Tolerance tol = sampling_tolerance();
    return solve(pb, cfg, [&](const Embedding& e) { return verify_bicolored(bg, e, d, tol).is_udr; });
}

std::vector<ScanSample> range_scan(const BicoloredGraph& bg, const Scalar& d_lo, const Scalar& d_hi, int steps,
                                   const RealizeConfig& cfg) {
    if (!(d_lo > 0) || !(d_lo < d_hi)) fail(ErrorCode::PreconditionViolated, "need 0 < d_lo < d_hi");
    if (steps < 2) fail(ErrorCode::PreconditionViolated, "need at least two steps");
    std::vector<ScanSample> out;
    for (int i = 0; i < steps; ++i) {
        Scalar d = d_lo + (d_hi - d_lo) * i / (steps - 1);
        out.push_back({d, realize_bicolored(bg, d, cfg).has_value()});
    }
    return out;
}

}  // namespace planechroma
