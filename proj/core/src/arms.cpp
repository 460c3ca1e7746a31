namespace perclab {}
