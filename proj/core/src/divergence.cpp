#include "cplx/divergence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <set>

#include <json.hpp>

#include "cplx/csv.hpp"
#include "cplx/error.hpp"
#include "cplx/special_functions.hpp"

namespace cplx {

namespace {

constexpr std::string_view kModule = "divergence";

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    return {lo, hi, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

// Globally adaptive integration over consecutive pieces of one integrand.
template <class F>
double integrate_adaptive(const F& f, std::span<const double> breaks, double abs_tol) {
    constexpr int kMaxSegments = 20000;
    std::priority_queue<Segment> heap;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const auto s = gauss_kronrod(f, breaks[i], breaks[i + 1]);
        total += s.value;
        total_error += s.error;
        heap.push(s);
    }
    int segments = static_cast<int>(heap.size());
    while (total_error > abs_tol) {
        if (segments >= kMaxSegments) {
            throw Error(Errc::numerical_integration, kModule,
                        "quadrature did not reach tolerance " + std::to_string(abs_tol) +
                            " (estimated error " + std::to_string(total_error) + ")");
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const auto left = gauss_kronrod(f, worst.lo, mid);
        const auto right = gauss_kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
        // Re-sum now and then so cancellation in the running totals cannot stall progress.
        if (segments % 256 == 0) {
            auto copy = heap;
            total = 0.0;
            total_error = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                total_error += copy.top().error;
                copy.pop();
            }
        }
    }
    return total;
}

void ensure_unique(const std::vector<std::string>& labels) {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw Error(Errc::duplicate_label, kModule, "duplicate type id '" + l + "'");
        }
    }
}

}  // namespace

double hellinger_beta(const BetaDist& x, const BetaDist& y) {
    const double mid = special::log_beta(0.5 * (x.a() + y.a()), 0.5 * (x.b() + y.b()));
    const double log_ratio = mid - 0.5 * (special::log_beta(x.a(), x.b()) +
                                          special::log_beta(y.a(), y.b()));
    // 1 - exp(log_ratio) may round slightly negative for near-identical inputs.
    return std::sqrt(std::max(0.0, -std::expm1(log_ratio)));
}

double hellinger_numeric(const BetaDist& x, const BetaDist& y, double abs_tol) {
    if (!(abs_tol >= 1e-12) || !std::isfinite(abs_tol)) {
        throw Error(Errc::domain, kModule, "abs_tol must be >= 1e-12");
    }
    // sqrt(f_x f_y) = t^(alpha-1) (1-t)^(beta-1) * exp(offset)
    const double alpha = 0.5 * (x.a() + y.a());
    const double beta = 0.5 * (x.b() + y.b());
    const double offset =
        -0.5 * (special::log_beta(x.a(), x.b()) + special::log_beta(y.a(), y.b()));
    auto kernel = [&](double log_t, double log_1mt) {
        return std::exp((alpha - 1.0) * log_t + (beta - 1.0) * log_1mt + offset);
    };

    // Breakpoints spread around the bulk of the geometric-mean density.
    const double s = alpha + beta;
    const double m = alpha / s;
    const double sd = std::sqrt(alpha * beta / (s * s * (s + 1.0)));
    std::vector<double> pts;
    for (double k : {-32.0, -16.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
        const double p = m + k * sd;
        if (p > 0.0 && p < 1.0) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const double left_edge = pts.front();
    const double right_edge = pts.back();

    // [0, left_edge] with t = u²: removes the t^(alpha-1) endpoint singularity.
    auto left = [&](double u) {
        if (u <= 0.0) return 0.0;
        return 2.0 * u * kernel(2.0 * std::log(u), std::log1p(-u * u));
    };
    // [right_edge, 1] with 1 - t = v².
    auto right = [&](double v) {
        if (v <= 0.0) return 0.0;
        return 2.0 * v * kernel(std::log1p(-v * v), 2.0 * std::log(v));
    };
    auto middle = [&](double t) { return kernel(std::log(t), std::log1p(-t)); };

    const double tol = abs_tol / 3.0;
    const std::array<double, 2> left_range{0.0, std::sqrt(left_edge)};
    const std::array<double, 2> right_range{0.0, std::sqrt(1.0 - right_edge)};
    double coefficient = integrate_adaptive(left, left_range, tol) +
                         integrate_adaptive(right, right_range, tol);
    if (pts.size() > 1) coefficient += integrate_adaptive(middle, pts, tol);
    return std::sqrt(std::max(0.0, 1.0 - coefficient));
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), entries_(labels_.size() * labels_.size(), 0.0) {
    ensure_unique(labels_);
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    if (entries_.size() != labels_.size() * labels_.size()) {
        throw Error(Errc::invalid_matrix, kModule,
                    "matrix has " + std::to_string(entries_.size()) + " entries for " +
                        std::to_string(labels_.size()) + " labels");
    }
    ensure_unique(labels_);
}

std::optional<std::size_t> DistanceMatrix::index_of(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
    entries_[i * size() + j] = value;
    entries_[j * size() + i] = value;
}

void DistanceMatrix::validate() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((*this)(i, i) != 0.0) {
            throw Error(Errc::invalid_matrix, kModule,
                        "nonzero diagonal at '" + labels_[i] + "'");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = (*this)(i, j);
            if (v != (*this)(j, i)) {
                throw Error(Errc::invalid_matrix, kModule,
                            "asymmetric entry ('" + labels_[i] + "', '" + labels_[j] + "')");
            }
            if (!(v >= 0.0 && v <= 1.0)) {
                throw Error(Errc::invalid_matrix, kModule,
                            "entry ('" + labels_[i] + "', '" + labels_[j] +
                                "') outside [0, 1]: " + std::to_string(v));
            }
        }
    }
}

DistanceMatrix DistanceMatrix::permuted(std::span<const std::size_t> order) const {
    std::vector<std::string> labels;
    labels.reserve(order.size());
    for (auto i : order) labels.push_back(labels_.at(i));
    DistanceMatrix out(std::move(labels));
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < order.size(); ++j) {
            out.entries_[i * order.size() + j] = (*this)(order[i], order[j]);
        }
    }
    return out;
}

DistanceMatrix build_matrix(std::span<const LabeledPosterior> posteriors) {
    if (posteriors.empty()) {
        throw Error(Errc::inconsistent_input, kModule, "no posteriors to compare");
    }
    std::vector<std::string> labels;
    labels.reserve(posteriors.size());
    for (const auto& p : posteriors) labels.push_back(p.type_id);
    DistanceMatrix m(std::move(labels));
    for (std::size_t i = 0; i < posteriors.size(); ++i) {
        for (std::size_t j = i + 1; j < posteriors.size(); ++j) {
            m.set(i, j, hellinger_beta(posteriors[i].dist, posteriors[j].dist));
        }
    }
    return m;
}

std::string matrix_to_json(const DistanceMatrix& m) {
    nlohmann::ordered_json doc;
    doc["labels"] = m.labels();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump(2) + "\n";
}

DistanceMatrix matrix_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        auto labels = doc.at("labels").get<std::vector<std::string>>();
        const auto& rows = doc.at("entries");
        if (!rows.is_array() || rows.size() != labels.size()) {
            throw Error(Errc::schema, kModule, "'entries' must have one row per label");
        }
        std::vector<double> entries;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != labels.size()) {
                throw Error(Errc::schema, kModule, "matrix rows must be square");
            }
            for (const auto& v : row) entries.push_back(v.get<double>());
        }
        DistanceMatrix m(std::move(labels), std::move(entries));
        m.validate();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::schema, kModule, std::string("malformed matrix JSON: ") + e.what());
    }
}

std::string matrix_to_csv(const DistanceMatrix& m) {
    std::vector<std::string> header{""};
    header.insert(header.end(), m.labels().begin(), m.labels().end());
    std::string out = csv::format_row(header);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::string> row{m.labels()[i]};
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(csv::format_double(m(i, j)));
        out += csv::format_row(row);
    }
    return out;
}

DistanceMatrix matrix_from_csv(std::string_view text) {
    const auto table = csv::parse(text);
    if (table.header.empty()) throw Error(Errc::schema, kModule, "empty matrix CSV");
    std::vector<std::string> labels(table.header.begin() + 1, table.header.end());
    if (table.rows.size() != labels.size()) {
        throw Error(Errc::schema, kModule, "matrix CSV must have one row per column label");
    }
    std::vector<double> entries;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (row.fields.front() != labels[i]) {
            throw Error(Errc::schema, kModule,
                        "line " + std::to_string(row.line) + ": row label '" + row.fields.front() +
                            "' does not match column '" + labels[i] + "'");
        }
        for (std::size_t j = 1; j < row.fields.size(); ++j) {
            entries.push_back(csv::parse_double(row.fields[j], "line " + std::to_string(row.line)));
        }
    }
    DistanceMatrix m(std::move(labels), std::move(entries));
    m.validate();
    return m;
}

}  // namespace cplx
