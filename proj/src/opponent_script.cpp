#include "orderlab/opponent_script.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orderlab {

const char* to_string(ScriptKind k) {
    switch (k) {
        case ScriptKind::SetFormula: return "set-formula";
        case ScriptKind::PairFormula: return "pair-formula";
        case ScriptKind::ElementFormula: return "element-formula";
        case ScriptKind::Functional: return "functional";
    }
    return "?";
}

namespace {

void check_set(const std::vector<int>& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("script: empty ") + what + " payload");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) throw std::invalid_argument(std::string("script: negative element in ") + what);
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument(std::string("script: ") + what + " not sorted strictly");
    }
}

} // namespace

void OpponentScript::validate() const {
    if (budget < 0) throw std::invalid_argument("script: negative budget");
    int lastStage = 0;
    for (const auto& ev : events) {
        if (ev.stage < 0 || ev.stage > budget)
            throw std::invalid_argument("script: event stage outside budget");
        if (ev.stage < lastStage) throw std::invalid_argument("script: events not sorted by stage");
        lastStage = ev.stage;
        switch (kind) {
            case ScriptKind::SetFormula:
                check_set(ev.R, "R");
                break;
            case ScriptKind::PairFormula:
                check_set(ev.R, "R");
                check_set(ev.S, "S");
                if (ev.R.back() >= ev.S.front())
                    throw std::invalid_argument("script: pair payload needs max R < min S");
                break;
            case ScriptKind::ElementFormula:
                if (ev.u < 0 || ev.v < 0) throw std::invalid_argument("script: negative element payload");
                if (ev.u == ev.v) throw std::invalid_argument("script: element payload needs u != v");
                break;
            case ScriptKind::Functional:
                if (ev.x < 0) throw std::invalid_argument("script: negative functional argument");
                if (ev.value.empty()) throw std::invalid_argument("script: empty functional value");
                for (std::size_t i = 0; i < ev.value.size(); ++i) {
                    if (ev.value[i] < 0) throw std::invalid_argument("script: negative code in value");
                    if (i > 0 && ev.value[i] <= ev.value[i - 1])
                        throw std::invalid_argument("script: value not sorted strictly");
                }
                break;
        }
    }
    if (kind == ScriptKind::Functional) {
        if (e < 0 || k < 0) throw std::invalid_argument("script: functional needs tags e, k >= 0");
        std::map<int, const ScriptEvent*> byArg;
        for (const auto& ev : events) {
            auto [it, fresh] = byArg.emplace(ev.x, &ev);
            if (!fresh) throw std::invalid_argument("script: two values for one functional argument");
        }
        const ScriptEvent* prev = nullptr;
        for (auto& [arg, ev] : byArg) {
            if (prev && prev->value.back() >= ev->value.front())
                throw std::invalid_argument("script: functional blocks must increase with the argument");
            prev = ev;
        }
    }
}

void OpponentScript::normalize() {
    for (auto& ev : events) {
        std::sort(ev.R.begin(), ev.R.end());
        ev.R.erase(std::unique(ev.R.begin(), ev.R.end()), ev.R.end());
        std::sort(ev.S.begin(), ev.S.end());
        ev.S.erase(std::unique(ev.S.begin(), ev.S.end()), ev.S.end());
        std::sort(ev.value.begin(), ev.value.end());
        ev.value.erase(std::unique(ev.value.begin(), ev.value.end()), ev.value.end());
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const ScriptEvent& a, const ScriptEvent& b) { return a.stage < b.stage; });
}

} // namespace orderlab
