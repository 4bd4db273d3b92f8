#include "betarith/beta_arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "greedy_core.hpp"

namespace betarith {

std::string to_string(Op op) {
    switch (op) {
        case Op::Add: return "add";
        case Op::Sub: return "sub";
        case Op::Mul: return "mul";
    }
    return "?";
}

namespace {

ZBeta combine(const CubicPisotUnit& unit, const ZBeta& x, const ZBeta& y, Op op) {
    switch (op) {
        case Op::Add: return x + y;
        case Op::Sub: return x - y;
        case Op::Mul: return unit.mul(x, y);
    }
    return {};
}

void require_beta_integer(const DigitString& s, const DigitString& ds, const char* name) {
    if (!s.is_integer()) throw std::invalid_argument(std::string(name) + " is not a beta-integer");
    DigitString mag = s;
    mag.negative = false;
    if (!is_admissible(mag, ds)) throw std::invalid_argument(std::string(name) + " is not admissible");
}

}  // namespace

ArithResult op_beta(const DigitString& x, const DigitString& y, Op op, const CubicPisotUnit& unit,
                    std::size_t step_budget) {
    const DigitString ds = dstar(unit);
    require_beta_integer(x, ds, "x");
    require_beta_integer(y, ds, "y");
    ArithResult r;
    r.x = x;
    r.y = y;
    r.op = op;
    r.outcome = greedy_expansion(unit, combine(unit, value_of(x, unit), value_of(y, unit), op), step_budget);
    return r;
}

std::size_t fractional_length(const ArithResult& r) {
    switch (r.outcome.status) {
        case GreedyStatus::Finite: return *r.outcome.fractional_length;
        case GreedyStatus::EventuallyPeriodic: return kInfiniteLength;
        case GreedyStatus::BudgetExceeded: break;
    }
    throw Undetermined("fractional_length: expansion exceeded its step budget");
}

std::vector<DigitString> admissible_integers(const CubicPisotUnit& unit, int max_digits) {
    std::vector<DigitString> out;
    if (max_digits <= 0) {
        out.push_back(DigitString{});
        return out;
    }
    const ParryAutomaton automaton(dstar(unit));
    std::vector<int> word(static_cast<std::size_t>(max_digits), 0);
    // Depth-first in lexicographic order over zero-padded words of fixed length.
    auto rec = [&](auto&& self, int pos, int state) -> void {
        if (pos == max_digits) {
            out.push_back(DigitString::integer(word));
            return;
        }
        for (int d = 0; d <= automaton.max_digit(); ++d) {
            const int next = automaton.step(state, d);
            if (next < 0) continue;
            word[static_cast<std::size_t>(pos)] = d;
            self(self, pos + 1, next);
        }
        word[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

struct Candidate {
    std::size_t length = 0;
    std::size_t i = 0, j = 0;
    int kind = 0;  // 0: x op y, 1: y - x
    bool found = false;
};

struct Tally {
    Candidate best;
    std::size_t evaluations = 0, finite = 0, periodic = 0, budget = 0;
};

bool earlier(const Candidate& a, const Candidate& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.kind < b.kind;
}

void scan(const detail::GreedyEngine& engine, const std::vector<ZBeta>& values, Op op, std::size_t budget,
          std::size_t i_begin, std::size_t i_step, Tally& tally) {
    const CubicPisotUnit& unit = engine.unit();
    std::vector<detail::I3> fast(values.size());
    bool all_fast = true;
    for (std::size_t i = 0; i < values.size(); ++i) all_fast = all_fast && detail::to_i3(values[i], fast[i]);

    auto record = [&](GreedyStatus status, std::size_t len, std::size_t i, std::size_t j, int kind) {
        switch (status) {
            case GreedyStatus::Finite: {
                ++tally.finite;
                Candidate c{len, i, j, kind, true};
                if (!tally.best.found || len > tally.best.length ||
                    (len == tally.best.length && earlier(c, tally.best))) {
                    tally.best = c;
                }
                break;
            }
            case GreedyStatus::EventuallyPeriodic: ++tally.periodic; break;
            case GreedyStatus::BudgetExceeded: ++tally.budget; break;
        }
    };
    auto slow = [&](const ZBeta& v, std::size_t i, std::size_t j, int kind) {
        detail::GreedyEngine::Shaped shaped = engine.expand(v, budget);
        if (shaped.zero) return record(GreedyStatus::Finite, 0, i, j, kind);
        const std::size_t n = shaped.run.digits.size();
        const std::size_t k = static_cast<std::size_t>(shaped.k);
        record(shaped.run.status, n > k ? n - k : 0, i, j, kind);
    };
    auto consider = [&](std::size_t i, std::size_t j, int kind) {
        ++tally.evaluations;
        if (all_fast) {
            try {
                detail::I3 v = op == Op::Mul ? engine.product(fast[i], fast[j])
                               : kind == 0   ? engine.sum(fast[i], fast[j])
                                             : engine.difference(fast[j], fast[i]);
                detail::GreedyEngine::Summary sum;
                if (engine.summarize(v, budget, sum)) return record(sum.status, sum.fractional_length, i, j, kind);
            } catch (const detail::OverflowI3&) {
            }
        }
        const ZBeta v = op == Op::Mul ? unit.mul(values[i], values[j])
                        : kind == 0   ? values[i] + values[j]
                                      : values[j] - values[i];
        slow(v, i, j, kind);
    };
    for (std::size_t i = i_begin; i < values.size(); i += i_step) {
        for (std::size_t j = i; j < values.size(); ++j) {
            consider(i, j, 0);
            if (op != Op::Mul) consider(i, j, 1);
        }
    }
}

}  // namespace

BruteForceResult brute_force_L(const CubicPisotUnit& unit, Op op, int max_operand_digits, std::size_t step_budget,
                               unsigned threads) {
    if (op == Op::Sub) op = Op::Add;
    const std::vector<DigitString> operands = admissible_integers(unit, max_operand_digits);
    std::vector<ZBeta> values;
    values.reserve(operands.size());
    for (const auto& s : operands) values.push_back(value_of(s, unit));

    const detail::GreedyEngine engine(unit);
    threads = std::max(1u, threads);
    std::vector<Tally> tallies(threads);
    if (threads == 1) {
        scan(engine, values, op, step_budget, 0, 1, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] { scan(engine, values, op, step_budget, t, threads, tallies[t]); });
        }
        for (auto& th : pool) th.join();
    }

    BruteForceResult out;
    out.operands = operands.size();
    Candidate best;
    for (const auto& t : tallies) {
        out.evaluations += t.evaluations;
        out.finite += t.finite;
        out.periodic += t.periodic;
        out.budget_exceeded += t.budget;
        const Candidate& c = t.best;
        if (!c.found) continue;
        if (!best.found || c.length > best.length || (c.length == best.length && earlier(c, best))) best = c;
    }
    if (best.found) {
        out.best = best.length;
        if (op == Op::Mul) {
            out.witness = op_beta(operands[best.i], operands[best.j], Op::Mul, unit, step_budget);
        } else if (best.kind == 0) {
            out.witness = op_beta(operands[best.i], operands[best.j], Op::Add, unit, step_budget);
        } else {
            out.witness = op_beta(operands[best.j], operands[best.i], Op::Sub, unit, step_budget);
        }
    }
    return out;
}

}  // namespace betarith
