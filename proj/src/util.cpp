#include "bettilab/util.hpp"
#include "bettilab/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace bettilab {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::EmptyEdge: return "EmptyEdge";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::NotAntichain: return "NotAntichain";
        case Errc::DegenerateLink: return "DegenerateLink";
        case Errc::TooManyEdges: return "TooManyEdges";
        case Errc::TooManyVertices: return "TooManyVertices";
        case Errc::TooManyFaces: return "TooManyFaces";
        case Errc::ColorCountTooSmall: return "ColorCountTooSmall";
        case Errc::NotAGraph: return "NotAGraph";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotPure: return "NotPure";
        case Errc::ZeroParts: return "ZeroParts";
        case Errc::BadParams: return "BadParams";
        case Errc::NotAHypertree: return "NotAHypertree";
        case Errc::NotAHyperforest: return "NotAHyperforest";
        case Errc::NotColorable: return "NotColorable";
        case Errc::ImproperColoring: return "ImproperColoring";
        case Errc::WitnessCheckFailed: return "WitnessCheckFailed";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::TooLarge: return "TooLarge";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ParseError: return "ParseError";
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::InvalidField: return "InvalidField";
    }
    return "UnknownError";
}

std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

VertexSet vertices_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= singleton(v);
    return s;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // The result fits in int64 for every n <= 64, but the intermediate
    // product needs 128 bits.
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return static_cast<std::int64_t>(r);
}

std::uint64_t unrank_subset(int n, int k, std::int64_t rank) {
    // Gosper order on masks is colexicographic on the descending element list;
    // build the subset from the largest element down.
    std::uint64_t mask = 0;
    int kk = k;
    for (int v = n - 1; v >= 0 && kk > 0; --v) {
        std::int64_t c = binomial(v, kk);
        if (rank >= c) {
            mask |= std::uint64_t(1) << v;
            rank -= c;
            --kk;
        }
    }
    return mask;
}

namespace {
std::atomic<int> g_thread_override{0};

int default_thread_count() {
    if (const char* env = std::getenv("BETTILAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}
} // namespace

void set_thread_count(int threads) { g_thread_override.store(threads < 0 ? 0 : threads); }

int effective_thread_count() {
    int v = g_thread_override.load();
    return v > 0 ? v : default_thread_count();
}

void parallel_chunks(std::int64_t count,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
    if (count <= 0) return;
    int workers = effective_thread_count();
    if (std::int64_t(workers) > count) workers = static_cast<int>(count);
    if (workers <= 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::int64_t lo = w * chunk;
        std::int64_t hi = std::min<std::int64_t>(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, &first_error, &error_mutex, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace bettilab
