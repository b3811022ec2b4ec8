// placeholder — module under construction
