#include <stdexcept>

#include "upk/adversaries.hpp"

namespace upk {

bool GreedyDecider::offer(double size) {
  if (level_ + size > kCapacity) return false;
  level_ += size;
  return true;
}

bool AcceptFirstDecider::offer(double size) {
  if (remaining_ <= 0 || level_ + size > kCapacity) return false;
  --remaining_;
  level_ += size;
  return true;
}

std::unique_ptr<OnlineDecider> make_decider(DeciderKind kind, double ahat,
                                            std::int64_t m) {
  switch (kind) {
    case DeciderKind::AT:
      return std::make_unique<ThresholdDecider>(at_threshold(ahat));
    case DeciderKind::ATup:
      return std::make_unique<ThresholdDecider>(atup_threshold(ahat));
    case DeciderKind::Greedy:
      return std::make_unique<GreedyDecider>();
    case DeciderKind::RejectAll:
      return std::make_unique<RejectAllDecider>();
    case DeciderKind::AcceptFirst:
      return std::make_unique<AcceptFirstDecider>(m);
  }
  throw std::invalid_argument("unknown decider kind");
}

}  // namespace upk
