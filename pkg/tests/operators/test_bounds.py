from hahnspec.operators import backward_difference, boundedness_ratio, forward_difference


class TestBoundednessRatio:
    def test_backward_difference_is_bounded_on_h(self, rng):
        """Test the empirical (h:h) ratio of Delta stays below 4."""
        estimate = boundedness_ratio(backward_difference(), trials=500, support=48, rng=rng)
        assert 1.0 < estimate.max_ratio <= 4.0
        assert 0 <= estimate.witness_trial < 500
        assert estimate.trials == 500

    def test_forward_difference_is_bounded_on_h(self, rng):
        estimate = boundedness_ratio(forward_difference(), trials=200, rng=rng)
        assert 0.0 < estimate.max_ratio <= 4.0
