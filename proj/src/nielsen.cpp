#include "pisot/nielsen.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <tuple>

#include "pisot/error.hpp"

namespace pisot {

namespace {

Endomorphism with_image(int rank, int target, Word image) {
  std::vector<Word> images = Endomorphism::identity(rank).images();
  images[static_cast<std::size_t>(target)] = std::move(image);
  return Endomorphism(std::move(images));
}

std::vector<NielsenMove> build_moves(int rank) {
  std::vector<NielsenMove> moves;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<Word> images = Endomorphism::identity(rank).images();
      std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      Endomorphism swap(std::move(images));
      moves.push_back({swap, swap,
                       std::string("swap ") + generator_name(i) + generator_name(j)});
    }
  }
  for (int i = 0; i < rank; ++i) {
    Endomorphism inv = with_image(rank, i, Word::generator(i, true));
    moves.push_back({inv, inv, std::string("invert ") + generator_name(i)});
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      for (bool neg : {false, true}) {
        const Word xi = Word::generator(i);
        const Word xj = Word::generator(j, neg);
        const Word xj_inv = xj.inverse();
        const std::string name = std::string(1, generator_name(i));
        moves.push_back({with_image(rank, i, xi * xj), with_image(rank, i, xi * xj_inv),
                         name + " -> " + (xi * xj).str()});
        moves.push_back({with_image(rank, i, xj * xi), with_image(rank, i, xj_inv * xi),
                         name + " -> " + (xj * xi).str()});
      }
    }
  }
  return moves;
}

struct Node {
  std::size_t length;
  int depth;
  std::uint64_t order;
  Endomorphism image;    // phi ∘ psi
  Endomorphism product;  // psi

  bool operator>(const Node& o) const {
    return std::tie(length, depth, order) > std::tie(o.length, o.depth, o.order);
  }
};

}  // namespace

const std::vector<NielsenMove>& nielsen_moves(int rank) {
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::invalid_argument, "bad rank");
  static std::mutex mu;
  static std::map<int, std::vector<NielsenMove>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(rank);
  if (it == cache.end()) it = cache.emplace(rank, build_moves(rank)).first;
  return it->second;
}

std::int64_t determinant(std::vector<std::vector<std::int64_t>> m) {
  // Bareiss; every division below is exact.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<Endomorphism> invert_automorphism(const Endomorphism& phi, int max_depth) {
  return invert_automorphism(phi, InversionOptions{.max_depth = max_depth});
}

std::optional<Endomorphism> invert_automorphism(const Endomorphism& phi,
                                                const InversionOptions& options) {
  const std::int64_t det = determinant(abelianization_matrix(phi));
  if (std::llabs(det) != 1) {
    throw Error(ErrorCode::not_invertible,
                phi.str() + " has abelianization determinant " + std::to_string(det));
  }
  const int rank = phi.rank();
  const auto& moves = nielsen_moves(rank);
  const Endomorphism id = Endomorphism::identity(rank);

  // Right-composing with a Nielsen move is a Nielsen transformation of the
  // image tuple; the same moves applied to the identity accumulate psi.
  std::priority_queue<Node, std::vector<Node>, std::greater<>> open;
  std::set<Endomorphism> seen{phi};
  std::uint64_t order = 0;
  open.push({phi.total_length(), 0, order++, phi, id});
  std::size_t expansions = 0;

  while (!open.empty() && expansions < options.expansion_budget) {
    Node node = open.top();
    open.pop();
    if (node.image == id) {
      if (compose(node.product, phi) == id) return node.product;
      continue;
    }
    if (node.depth >= options.max_depth) continue;
    ++expansions;
    for (const NielsenMove& mv : moves) {
      Endomorphism next = compose(node.image, mv.map);
      if (!seen.insert(next).second) continue;
      const std::size_t len = next.total_length();
      open.push({len, node.depth + 1, order++, std::move(next), compose(node.product, mv.map)});
    }
  }
  return std::nullopt;
}

}  // namespace pisot
