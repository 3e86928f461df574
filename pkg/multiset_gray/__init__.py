# multiset_gray package
