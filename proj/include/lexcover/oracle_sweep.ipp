// Word-sweep kernels. Each length is swept as a flat index range so the
// parallel path splits it across OpenMP threads; ties resolve to the
// smallest index, which makes both paths return identical results.

#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lexcover::oracle {
namespace detail {

inline std::uint64_t count_words(std::size_t alphabet_size, std::size_t len) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (alphabet_size != 0 &&
        n > std::numeric_limits<std::uint64_t>::max() / alphabet_size)
      throw std::overflow_error("word sweep too large");
    n *= alphabet_size;
  }
  return n;
}

inline Word word_at(const std::string& alphabet, std::size_t len,
                    std::uint64_t index) {
  Word w(len, kNoLetter);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = alphabet[index % alphabet.size()];
    index /= alphabet.size();
  }
  return w;
}

// Runs body(index) for index in [0, n); exceptions are rethrown on the
// calling thread.
template <typename Body>
void for_each_index(std::uint64_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::uint64_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

template <typename F>
WordMax sweep_max(const std::string& alphabet, std::size_t max_len,
                  F&& value_of, Execution exec) {
  WordMax out;
  bool have = false;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (alphabet.empty() && len > 0) {
      out.per_length.push_back(0);
      continue;
    }
    const std::uint64_t n = detail::count_words(alphabet.size(), len);
    std::vector<std::uint64_t> values(n);
    detail::for_each_index(n, exec, [&](std::uint64_t i) {
      values[i] = value_of(detail::word_at(alphabet, len, i));
    });
    std::uint64_t best = 0;
    std::uint64_t best_index = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (i == 0 || values[i] > best) {
        best = values[i];
        best_index = i;
      }
    }
    out.per_length.push_back(best);
    if (!have || best > out.value) {
      out.value = best;
      out.witness = detail::word_at(alphabet, len, best_index);
      have = true;
    }
  }
  const auto& pl = out.per_length;
  out.growing = pl.size() >= 3 && pl[pl.size() - 1] > pl[pl.size() - 2] &&
                pl[pl.size() - 2] > pl[pl.size() - 3];
  return out;
}

template <typename F>
std::optional<Word> sweep_first_failure(const std::string& alphabet,
                                        std::size_t max_len, F&& same,
                                        Execution exec) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (alphabet.empty() && len > 0) break;
    const std::uint64_t n = detail::count_words(alphabet.size(), len);
    std::vector<char> ok(n);
    detail::for_each_index(n, exec, [&](std::uint64_t i) {
      ok[i] = same(detail::word_at(alphabet, len, i)) ? 1 : 0;
    });
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!ok[i]) return detail::word_at(alphabet, len, i);
    }
  }
  return std::nullopt;
}

}  // namespace lexcover::oracle
