#include "esir/sweep.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "esir/labeling.hpp"

namespace esir {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

SweepRecord sweep_instance(int n, int l, const SweepOptions& opt) {
    SweepRecord rec;
    rec.n = n;
    rec.l = l;
    rec.kind = classify(n, l);
    rec.lower_bound = lower_bound(dandelion(n, l)).lower_bound;

    auto t0 = Clock::now();
    ConstructionResult built = construct(n, l, /*allow_repair=*/!opt.verbatim);
    rec.construct_ms = elapsed_ms(t0);
    rec.constructive_k = built.claimed_k;
    rec.construction_valid = built.report.valid;
    rec.repaired = built.repaired;

    if (n <= opt.exact_up_to) {
        auto t1 = Clock::now();
        EsResult es = es_exact(dandelion(n, l), opt.budget);
        rec.exact_ms = elapsed_ms(t1);
        if (es.status == EsResult::Status::exact) rec.exact_k = es.k;
    }

    bool equality_claim = rec.kind == CaseKind::case1 || rec.kind == CaseKind::case2;
    rec.discrepancy = !rec.construction_valid ||
                      (rec.exact_k && equality_claim && *rec.exact_k != n - l + 1);
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepOptions& opt) {
    if (opt.l_min < 2)
        throw DomainError("sweep: require l_min >= 2 (got " + std::to_string(opt.l_min) + ")");
    if (opt.l_max < opt.l_min)
        throw DomainError("sweep: require l_max >= l_min (got l_max=" + std::to_string(opt.l_max) +
                          ", l_min=" + std::to_string(opt.l_min) + ")");
    if (opt.n_max < opt.l_min + 1)
        throw DomainError("sweep: require n_max >= l_min+1 (got n_max=" +
                          std::to_string(opt.n_max) + ", l_min=" + std::to_string(opt.l_min) + ")");

    std::vector<std::pair<int, int>> grid;  // (l, n), already in output order
    for (int l = opt.l_min; l <= opt.l_max; ++l)
        for (int n = l + 1; n <= opt.n_max; ++n) grid.emplace_back(l, n);

    std::vector<SweepRecord> records(grid.size());
    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (!failed.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            try {
                records[i] = sweep_instance(grid[i].second, grid[i].first, opt);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "n,l,case,lower_bound,constructive_k,construction_valid,repaired,exact_k,"
           "discrepancy,construct_ms,exact_ms\n";
    for (const SweepRecord& r : records) {
        out << r.n << ',' << r.l << ',' << case_name(r.kind) << ',' << r.lower_bound << ','
            << r.constructive_k << ',' << (r.construction_valid ? "true" : "false") << ','
            << (r.repaired ? "true" : "false") << ',';
        if (r.exact_k) out << *r.exact_k;
        out << ',' << (r.discrepancy ? "true" : "false") << ',' << r.construct_ms << ',';
        if (r.exact_ms) out << *r.exact_ms;
        out << '\n';
    }
    return out.str();
}

int count_discrepancies(const std::vector<SweepRecord>& records) {
    int count = 0;
    for (const SweepRecord& r : records)
        if (r.discrepancy) ++count;
    return count;
}

}  // namespace esir
