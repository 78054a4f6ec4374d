#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace khov {

// Edge labels in counterclockwise order; e[0] is the incoming under edge,
// so the under strand runs e[0] -> e[2].
struct Crossing {
  std::array<int, 4> e{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// One end of an edge at a crossing slot.
struct Dart {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Oriented planar link diagram. Construction validates the PD data and derives
// orientation, signs, components and the face structure of the sphere embedding.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, std::vector<int> free_labels);

  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_edges() const { return num_edges_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int edge(int x, int slot) const { return crossings_[x].e[slot]; }

  int free_circles() const { return static_cast<int>(free_labels_.size()); }
  const std::vector<int>& free_labels() const { return free_labels_; }
  bool is_free_label(int e) const { return head_[e].crossing < 0; }

  int num_components() const { return static_cast<int>(components_.size()); }
  // Component index of an edge label.
  int component_of(int e) const { return component_of_[e]; }
  // Edge labels of a component in orientation order.
  const std::vector<int>& component_edges(int k) const { return components_[k]; }

  int sign(int x) const { return sign_[x]; }
  // Slot at which the over strand enters: 3 for positive crossings, 1 for negative.
  int over_in_slot(int x) const { return sign_[x] > 0 ? 3 : 1; }
  int c_plus() const;
  int c_minus() const;
  int writhe() const { return c_plus() - c_minus(); }

  // Ends of a crossing edge; the edge runs from tail to head.
  Dart head(int e) const { return head_[e]; }
  Dart tail(int e) const { return tail_[e]; }
  Dart other_end(Dart d) const;

  int num_faces() const { return num_faces_; }
  // Face occupying the corner between slot k and slot k+1 of crossing x.
  int face_at(int x, int corner) const { return corner_face_[4 * x + corner]; }
  int left_face(int e) const;
  int right_face(int e) const;

  // Connected pieces of the 4-valent crossing graph; free circles are not pieces.
  int num_pieces() const { return num_pieces_; }
  int piece_of_crossing(int x) const { return crossing_piece_[x]; }
  int piece_of_face(int f) const { return face_piece_[f]; }
  // Face to the left of the lowest-numbered edge of the piece.
  int default_outer_face(int piece) const;
  // One piece and no free circles, or a single free circle.
  bool is_connected() const;

  std::string to_pd() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_labels_ == b.free_labels_;
  }

 private:
  void derive();
  void derive_faces();

  std::vector<Crossing> crossings_;
  std::vector<int> free_labels_;
  int num_edges_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;  // indexed by label
  std::vector<Dart> head_, tail_;  // indexed by label
  std::vector<int> sign_;
  int num_faces_ = 0;
  std::vector<int> corner_face_;
  int num_pieces_ = 0;
  std::vector<int> crossing_piece_;
  std::vector<int> face_piece_;
};

LinkDiagram parse_pd(std::string_view text);

// Half the signed count of crossings between components i and j.
int linking_number(const LinkDiagram& d, int i, int j);

// True iff every strand alternates over/under along its component.
bool is_alternating(const LinkDiagram& d);

struct FramingData {
  std::vector<int> signed_points;  // t(D) per component
  std::vector<int> component_framing;
  int total = 0;
};

// Framing coefficients of the blackboard framing corrected by signed points.
FramingData framing(const LinkDiagram& d, std::vector<int> signed_points = {});

// Relabeling-invariant code; equal codes mean equal oriented planar diagrams.
std::string canonical_code(const LinkDiagram& d);
bool same_diagram(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace khov
