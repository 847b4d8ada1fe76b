from lectl.utils.parallel import ordered_map


def test_ordered_map_in_process():
    assert ordered_map(str, range(5)) == ['0', '1', '2', '3', '4']
    assert ordered_map(str, []) == []


def test_ordered_map_keeps_input_order():
    items = list(range(50, 0, -1))

    assert ordered_map(abs, [-item for item in items], jobs=4) == items
