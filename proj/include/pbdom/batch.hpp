#pragma once

#include "pbdom/error.hpp"

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

namespace pbdom {

/// Result of checking one corpus item.
struct Outcome {
  bool ok = true;
  std::string kind;  ///< error class name when !ok
  std::string what;
};

enum class Exec { serial, parallel };

namespace detail {

template <class F>
Outcome run_one(F& f, std::size_t i) {
  try {
    f(i);
    return {};
  } catch (const LogicError& e) {
    return {false, "logic", e.what()};
  } catch (const ResourceError& e) {
    return {false, "resource", e.what()};
  } catch (const UsageError& e) {
    return {false, "usage", e.what()};
  } catch (const StructuralError& e) {
    return {false, "structural", e.what()};
  } catch (const std::exception& e) {
    return {false, "other", e.what()};
  }
}

}  // namespace detail

/// Runs f(0) .. f(n-1), catching library errors per item. Reference version.
template <class F>
std::vector<Outcome> run_serial(std::size_t n, F f) {
  std::vector<Outcome> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::run_one(f, i);
  return out;
}

/// Same results as run_serial, items spread over OpenMP threads.
template <class F>
std::vector<Outcome> run_parallel(std::size_t n, F f) {
  std::vector<Outcome> out(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = detail::run_one(f, static_cast<std::size_t>(i));
  return out;
}

template <class F>
std::vector<Outcome> run_batch(std::size_t n, F f, Exec e) {
  return e == Exec::parallel ? run_parallel(n, f) : run_serial(n, f);
}

}  // namespace pbdom
