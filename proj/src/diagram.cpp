#include "khov/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "khov/error.hpp"
#include "khov/union_find.hpp"

namespace khov {

namespace {

std::string crossing_text(const Crossing& c) {
  return "X(" + std::to_string(c.e[0]) + "," + std::to_string(c.e[1]) + "," + std::to_string(c.e[2]) + "," +
         std::to_string(c.e[3]) + ")";
}

// A traversal step: the edge label and the dart where it arrives.
struct Step {
  int label;
  Dart arrive;
};

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<int> free_labels)
    : crossings_(std::move(crossings)), free_labels_(std::move(free_labels)) {
  derive();
}

int LinkDiagram::c_plus() const { return static_cast<int>(std::count(sign_.begin(), sign_.end(), 1)); }

int LinkDiagram::c_minus() const { return static_cast<int>(std::count(sign_.begin(), sign_.end(), -1)); }

Dart LinkDiagram::other_end(Dart d) const {
  int e = edge(d.crossing, d.slot);
  return head_[e] == d ? tail_[e] : head_[e];
}

int LinkDiagram::left_face(int e) const {
  Dart h = head_[e];
  return face_at(h.crossing, (h.slot + 3) % 4);
}

int LinkDiagram::right_face(int e) const {
  Dart h = head_[e];
  return face_at(h.crossing, h.slot);
}

int LinkDiagram::default_outer_face(int piece) const {
  for (int e = 1; e <= num_edges_; ++e) {
    if (is_free_label(e)) continue;
    if (crossing_piece_[head_[e].crossing] == piece) return left_face(e);
  }
  throw Error(ErrorCode::EmbeddingUnavailable, "piece " + std::to_string(piece) + " has no edges");
}

bool LinkDiagram::is_connected() const {
  if (crossings_.empty()) return free_labels_.size() == 1;
  return num_pieces_ == 1 && free_labels_.empty();
}

std::string LinkDiagram::to_pd() const {
  std::string out;
  for (const auto& c : crossings_) {
    if (!out.empty()) out += ";";
    out += crossing_text(c);
  }
  for (int f : free_labels_) {
    if (!out.empty()) out += ";";
    out += "O(" + std::to_string(f) + ")";
  }
  return out;
}

void LinkDiagram::derive() {
  const int nx = num_crossings();
  std::map<int, std::vector<Dart>> occ;
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < 4; ++s) {
      int e = crossings_[x].e[s];
      if (e <= 0) throw Error(ErrorCode::ParseError, "edge labels must be positive, got " + std::to_string(e));
      occ[e].push_back({x, s});
    }
  for (const auto& [e, darts] : occ) {
    if (darts.size() == 1) throw Error(ErrorCode::DanglingEdge, "edge " + std::to_string(e) + " occurs once");
    if (darts.size() > 2) throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(e) + " occurs more than twice");
  }
  std::set<int> labels;
  for (const auto& [e, darts] : occ) labels.insert(e);
  for (int f : free_labels_) {
    if (f <= 0) throw Error(ErrorCode::ParseError, "edge labels must be positive, got " + std::to_string(f));
    if (!labels.insert(f).second) throw Error(ErrorCode::DuplicateEdge, "edge " + std::to_string(f) + " reused by O()");
  }
  num_edges_ = static_cast<int>(labels.size());
  if (!labels.empty() && *labels.rbegin() != num_edges_)
    throw Error(ErrorCode::BadNumbering, "edge labels must be exactly 1.." + std::to_string(num_edges_));

  head_.assign(num_edges_ + 1, Dart{});
  tail_.assign(num_edges_ + 1, Dart{});
  component_of_.assign(num_edges_ + 1, -1);
  components_.clear();

  auto other = [&](int e, Dart d) {
    const auto& v = occ.at(e);
    return v[0] == d ? v[1] : v[0];
  };
  auto traverse = [&](Dart start) {
    std::vector<Step> steps;
    Dart depart = start;
    for (;;) {
      int e = crossings_[depart.crossing].e[depart.slot];
      Dart arrive = other(e, depart);
      steps.push_back({e, arrive});
      Dart next{arrive.crossing, (arrive.slot + 2) % 4};
      if (next == start) break;
      depart = next;
      if (steps.size() > occ.size()) throw Error(ErrorCode::BadNumbering, "strand does not close up");
    }
    return steps;
  };

  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(num_edges_ + 1, false);
  for (const auto& [e0, darts] : occ) {
    if (seen[e0]) continue;
    std::vector<Step> steps = traverse(darts[0]);
    int fwd_under = 0, bwd_under = 0;
    for (const auto& st : steps) {
      if (st.arrive.slot == 0) ++fwd_under;
      if (st.arrive.slot == 2) ++bwd_under;
    }
    std::vector<int> ls;
    for (const auto& st : steps) ls.push_back(st.label);
    std::set<int> uniq(ls.begin(), ls.end());
    if (uniq.size() != ls.size()) throw Error(ErrorCode::BadNumbering, "strand through edge " + std::to_string(e0) + " is inconsistent");
    const int n = static_cast<int>(ls.size());
    const int lo = *uniq.begin();
    bool forward = true;
    if (fwd_under > 0 && bwd_under > 0) {
      throw Error(ErrorCode::BadNumbering, "under strands through edge " + std::to_string(e0) + " disagree on direction");
    } else if (fwd_under > 0 || bwd_under > 0) {
      forward = fwd_under > 0;
    } else if (n >= 3) {
      int at = static_cast<int>(std::find(ls.begin(), ls.end(), lo) - ls.begin());
      forward = ls[(at + 1) % n] == lo + 1;
    } else if (n == 2) {
      const Step& first = steps[0].arrive.crossing <= steps[1].arrive.crossing ? steps[0] : steps[1];
      forward = first.label == lo;
    }
    if (!forward) steps = traverse(darts[1]);
    ls.clear();
    for (const auto& st : steps) ls.push_back(st.label);
    int at = static_cast<int>(std::find(ls.begin(), ls.end(), lo) - ls.begin());
    std::rotate(ls.begin(), ls.begin() + at, ls.end());
    for (int k = 0; k < n; ++k)
      if (ls[k] != lo + k)
        throw Error(ErrorCode::BadNumbering, "edges along the component of edge " + std::to_string(lo) + " are not consecutive");
    for (const auto& st : steps) {
      head_[st.label] = st.arrive;
      seen[st.label] = true;
    }
    // Tails are the departure darts: the dart opposite the previous arrival.
    for (int k = 0; k < n; ++k) {
      const Step& prev = steps[(k + n - 1) % n];
      tail_[steps[k].label] = Dart{prev.arrive.crossing, (prev.arrive.slot + 2) % 4};
    }
    comps.push_back(ls);
  }
  for (int f : free_labels_) comps.push_back({f});
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  components_ = std::move(comps);
  for (int k = 0; k < num_components(); ++k)
    for (int e : components_[k]) component_of_[e] = k;

  sign_.assign(nx, 0);
  for (int x = 0; x < nx; ++x) {
    if (head_[crossings_[x].e[3]] == Dart{x, 3}) {
      sign_[x] = 1;
    } else if (head_[crossings_[x].e[1]] == Dart{x, 1}) {
      sign_[x] = -1;
    } else {
      throw Error(ErrorCode::BadNumbering, "over strand at crossing " + std::to_string(x) + " has no direction");
    }
  }
  derive_faces();
}

void LinkDiagram::derive_faces() {
  const int nx = num_crossings();
  corner_face_.assign(4 * nx, -1);
  num_faces_ = 0;
  for (int start = 0; start < 4 * nx; ++start) {
    if (corner_face_[start] >= 0) continue;
    int cur = start;
    while (corner_face_[cur] < 0) {
      corner_face_[cur] = num_faces_;
      Dart leave{cur / 4, (cur % 4 + 1) % 4};
      Dart arrive = other_end(leave);
      cur = 4 * arrive.crossing + arrive.slot;
    }
    if (cur != start) throw Error(ErrorCode::NonPlanar, "face orbit does not close");
    ++num_faces_;
  }

  UnionFind uf(nx);
  for (int e = 1; e <= num_edges_; ++e)
    if (!is_free_label(e)) uf.unite(head_[e].crossing, tail_[e].crossing);
  std::map<int, int> root_piece;
  crossing_piece_.assign(nx, -1);
  for (int x = 0; x < nx; ++x) {
    auto [it, inserted] = root_piece.try_emplace(uf.find(x), static_cast<int>(root_piece.size()));
    crossing_piece_[x] = it->second;
  }
  num_pieces_ = static_cast<int>(root_piece.size());
  face_piece_.assign(num_faces_, -1);
  for (int c = 0; c < 4 * nx; ++c) face_piece_[corner_face_[c]] = crossing_piece_[c / 4];

  std::vector<int> vertices(num_pieces_, 0), faces(num_pieces_, 0);
  for (int x = 0; x < nx; ++x) ++vertices[crossing_piece_[x]];
  for (int f = 0; f < num_faces_; ++f) ++faces[face_piece_[f]];
  for (int p = 0; p < num_pieces_; ++p) {
    if (vertices[p] - 2 * vertices[p] + faces[p] != 2)
      throw Error(ErrorCode::NonPlanar, "Euler characteristic " + std::to_string(faces[p] - vertices[p]) +
                                            " on a piece with " + std::to_string(vertices[p]) + " crossings");
  }
}

LinkDiagram parse_pd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<Crossing> crossings;
  std::vector<int> frees;
  if (s.empty()) return LinkDiagram(crossings, frees);

  size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
  };
  auto read_int = [&]() {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos = static_cast<size_t>(ptr - s.data());
    return v;
  };
  auto expect = [&](char ch) {
    if (pos >= s.size() || s[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  for (;;) {
    if (pos >= s.size()) fail("expected item");
    char kind = s[pos++];
    expect('(');
    if (kind == 'X') {
      Crossing c;
      for (int k = 0; k < 4; ++k) {
        if (k > 0) expect(',');
        c.e[k] = read_int();
      }
      crossings.push_back(c);
    } else if (kind == 'O') {
      frees.push_back(read_int());
    } else {
      --pos;
      fail("expected X or O");
    }
    expect(')');
    if (pos == s.size()) break;
    expect(';');
  }
  return LinkDiagram(std::move(crossings), std::move(frees));
}

int linking_number(const LinkDiagram& d, int i, int j) {
  const int n = d.num_components();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw Error(ErrorCode::ComponentOutOfRange,
                "components " + std::to_string(i) + "," + std::to_string(j) + " of " + std::to_string(n));
  int total = 0;
  for (int x = 0; x < d.num_crossings(); ++x) {
    int cu = d.component_of(d.edge(x, 0));
    int co = d.component_of(d.edge(x, 1));
    if ((cu == i && co == j) || (cu == j && co == i)) total += d.sign(x);
  }
  return total / 2;
}

bool is_alternating(const LinkDiagram& d) {
  for (int e = 1; e <= d.num_edges(); ++e) {
    if (d.is_free_label(e)) continue;
    bool tail_under = d.tail(e).slot == 2;
    bool head_under = d.head(e).slot == 0;
    if (tail_under == head_under) return false;
  }
  return true;
}

FramingData framing(const LinkDiagram& d, std::vector<int> signed_points) {
  const int n = d.num_components();
  if (signed_points.empty()) signed_points.assign(n, 0);
  if (static_cast<int>(signed_points.size()) != n)
    throw Error(ErrorCode::ComponentOutOfRange, "signed points given for " + std::to_string(signed_points.size()) +
                                                    " of " + std::to_string(n) + " components");
  FramingData f;
  f.signed_points = signed_points;
  f.component_framing = signed_points;
  for (int x = 0; x < d.num_crossings(); ++x) {
    int cu = d.component_of(d.edge(x, 0));
    int co = d.component_of(d.edge(x, 1));
    if (cu == co) f.component_framing[cu] += d.sign(x);
  }
  for (int v : f.component_framing) f.total += v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.total += 2 * linking_number(d, i, j);
  return f;
}

namespace {

// Relabels the piece containing `start` by traversal from that edge.
std::string piece_code(const LinkDiagram& d, int start) {
  std::map<int, int> label;
  std::map<int, int> xlabel;
  std::vector<int> queue{start};
  int next_label = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e0 = queue[qi];
    if (label.count(e0)) continue;
    int e = e0;
    do {
      label[e] = next_label++;
      Dart h = d.head(e);
      if (!xlabel.count(h.crossing)) xlabel[h.crossing] = static_cast<int>(xlabel.size());
      // The other strand at this crossing: its incoming edge.
      int other_in = h.slot == 0 ? d.edge(h.crossing, d.over_in_slot(h.crossing)) : d.edge(h.crossing, 0);
      if (!label.count(other_in)) queue.push_back(other_in);
      int out_slot = (h.slot + 2) % 4;
      e = d.edge(h.crossing, out_slot);
    } while (e != e0);
  }
  std::vector<std::array<int, 5>> rows;
  for (const auto& [x, nx] : xlabel) {
    const auto& c = d.crossings()[x];
    rows.push_back({nx, label.at(c.e[0]), label.at(c.e[1]), label.at(c.e[2]), label.at(c.e[3])});
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& r : rows)
    out += "X(" + std::to_string(r[1]) + "," + std::to_string(r[2]) + "," + std::to_string(r[3]) + "," +
           std::to_string(r[4]) + ")";
  return out;
}

}  // namespace

std::string canonical_code(const LinkDiagram& d) {
  std::vector<std::string> pieces(d.num_pieces());
  std::vector<bool> have(d.num_pieces(), false);
  for (int e = 1; e <= d.num_edges(); ++e) {
    if (d.is_free_label(e)) continue;
    int p = d.piece_of_crossing(d.head(e).crossing);
    std::string code = piece_code(d, e);
    if (!have[p] || code < pieces[p]) {
      pieces[p] = code;
      have[p] = true;
    }
  }
  std::sort(pieces.begin(), pieces.end());
  std::string out;
  for (const auto& p : pieces) out += "[" + p + "]";
  out += "O" + std::to_string(d.free_circles());
  return out;
}

bool same_diagram(const LinkDiagram& a, const LinkDiagram& b) { return canonical_code(a) == canonical_code(b); }

}  // namespace khov
