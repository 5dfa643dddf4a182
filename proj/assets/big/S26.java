class S26 extends Abstract6 {
  void enter() {
    new S46();
    send("msg9");
    new S15();
  }
  public void exit() {
    switch (event) {
      case EV747:
        switch (event) {
          case EV748:
            new S97();
            break;
        }
        try {
          new S75();
          if (x8 > 0) {
            new S48();
            new S1();
            new S39();
          } else {
            new State();
            new S76();
            send("msg12");
            log("note");
          }
          new S75();
          send("msg1");
        } catch (TimeoutException e) {
          if (x9 > 0) {
            new S44();
            new S70();
            send("msg1");
          }
          send("msg16");
          if (x1 > 0) {
            new S86();
            log("note");
          }
          try {
            new S22();
            new S83();
            log("note");
            new S90();
          } catch (TimeoutException e) {
            send("msg18");
            send("msg3");
          } finally {
            send("msg8");
            send("msg19");
            send("msg11");
            new S7();
          }
        } finally {
          if (x4 > 0) {
            new S59();
          } else {
            send("msg13");
            send("msg14");
          }
          switch (event) {
            case EV749:
              new S6();
              break;
          }
          log("note");
          send("msg13");
        }
        if (x7 > 0) {
          new S14();
        } else {
          send("msg8");
          try {
            send("msg11");
            new S21();
            new S3();
          } finally {
            send("msg3");
            send("msg4");
            new S64();
            send("msg14");
          }
          send("msg6");
        }
        break;
    }
  }
  public void handle() {
    try {
      send("msg14");
    } catch (TimeoutException e) {
      log("note");
      switch (event) {
        case EV750:
          send("msg2");
          try {
            send("msg8");
            send("msg9");
          } finally {
            new S25();
          }
          new S28();
          break;
        case EV751:
          switch (event) {
            case EV752:
              new State();
              send("msg18");
              log("note");
              new S36();
              break;
            case EV753:
              send("msg17");
              new S2();
              new S38();
              send("msg14");
              break;
          }
          send("msg3");
          new S91();
          break;
      }
      switch (event) {
        case EV754:
          switch (event) {
            case EV755:
              send("msg4");
              break;
            case EV756:
              new S12();
              log("note");
              break;
          }
          log("note");
          new S58();
          new S79();
          break;
      }
      new S37();
    } finally {
      log("note");
    }
    send("msg1");
  }
  void tick() {
    try {
      send("msg17");
      new S97();
      new S55();
      new S33();
    } finally {
      new S49();
      new S99();
      log("note");
      send("msg4");
    }
    new Helper();
  }
  void reset() {
    if (x3 > 0) {
      log("note");
      try {
        new S78();
        new S73();
      } catch (IllegalStateException e) {
        if (x7 > 0) {
          send("msg14");
        } else {
          send("msg19");
          send("msg17");
          send("msg18");
        }
        send("msg16");
        send("msg10");
        send("msg9");
      }
      log("note");
    } else {
      new S18();
      new S18();
    }
    new S75();
    new Helper();
    if (x7 > 0) {
      send("msg13");
    } else {
      switch (event) {
        case EV757:
          new S69();
          break;
        case EV758:
          send("msg19");
          new S16();
          new S20();
          if (x1 > 0) {
            new S72();
            send("msg8");
            send("msg8");
          } else {
            new S31();
            new S22();
            new S83();
            new S20();
          }
          break;
      }
      send("msg8");
    }
  }
  void open() {
    send("msg15");
    new S77();
    new S98();
  }
  void close() {
    if (x8 > 0) {
      new S46();
      try {
        send("msg13");
        log("note");
      } catch (IllegalStateException e) {
        log("note");
        new S64();
      } catch (IllegalStateException e) {
        new S8();
        log("note");
        if (x6 > 0) {
          send("msg16");
          new S31();
          new S54();
        }
      }
      new S31();
    }
    switch (event) {
      case EV759:
        send("msg9");
        if (x1 > 0) {
          new Helper();
          try {
            new S93();
            new S36();
            log("note");
          } catch (IOException e) {
            send("msg6");
            new S32();
          }
          new S66();
          new S22();
        }
        if (x3 > 0) {
          switch (event) {
            case EV760:
              new S73();
              break;
          }
          if (x4 > 0) {
            new S63();
            log("note");
            send("msg0");
            new S93();
          }
          send("msg12");
          new S9();
        } else {
          send("msg3");
          new S30();
        }
        break;
    }
    new S94();
  }
  void start() {
    switch (event) {
      case EV761:
        send("msg9");
        try {
          if (x7 > 0) {
            new S12();
          } else {
            send("msg16");
          }
          if (x3 > 0) {
            send("msg9");
            send("msg10");
            send("msg9");
          } else {
            send("msg0");
            new State();
            send("msg15");
            new S65();
          }
          new S95();
        } catch (TimeoutException e) {
          send("msg6");
          new State();
          new S99();
        } finally {
          new S97();
          if (x8 > 0) {
            send("msg8");
            send("msg7");
            new S59();
            new S97();
          }
          send("msg10");
          try {
            new S32();
          } catch (IllegalStateException e) {
            send("msg0");
            send("msg10");
          }
        }
        break;
      case EV762:
        switch (event) {
          case EV763:
            send("msg1");
            new S100();
            if (x7 > 0) {
              new S4();
            }
            try {
              send("msg19");
              send("msg7");
              new S17();
              new S61();
            } catch (IllegalStateException e) {
              send("msg1");
              new S61();
              new S79();
            }
            break;
        }
        break;
    }
    send("msg15");
    if (x5 > 0) {
      if (x0 > 0) {
        send("msg19");
        send("msg13");
        new S23();
        if (x4 > 0) {
          new S42();
          new S60();
        }
      } else {
        if (x1 > 0) {
          send("msg7");
          new S72();
          new S60();
          new S45();
        } else {
          new S13();
          log("note");
          send("msg2");
        }
      }
      send("msg10");
      send("msg19");
    } else {
      if (x3 > 0) {
        send("msg5");
      }
      new S58();
      new S1();
      send("msg15");
    }
    new S9();
  }
  void stop() {
    new Helper();
    send("msg3");
    send("msg8");
  }
  void pause() {
    send("msg12");
    try {
      send("msg3");
    } catch (IllegalStateException e) {
      new S40();
      try {
        switch (event) {
          case EV764:
            new S19();
            new S9();
            new State();
            new S97();
            break;
        }
      } catch (IllegalStateException e) {
        new S53();
        new S9();
      } finally {
        new S82();
        switch (event) {
          case EV765:
            send("msg19");
            new S15();
            new S9();
            break;
          case EV766:
            log("note");
            new S8();
            send("msg4");
            break;
        }
      }
    } finally {
      try {
        switch (event) {
          case EV767:
            new S34();
            break;
        }
        send("msg15");
        new S63();
      } finally {
        new S1();
        send("msg14");
        switch (event) {
          case EV768:
            new S84();
            send("msg10");
            break;
        }
        new S97();
      }
      new S4();
      switch (event) {
        case EV769:
          new S48();
          try {
            new S38();
            send("msg3");
            new S91();
            send("msg14");
          } finally {
            send("msg10");
            new S69();
            new State();
            new State();
          }
          switch (event) {
            case EV770:
              send("msg14");
              new S5();
              send("msg14");
              break;
          }
          new S12();
          break;
      }
    }
    new S72();
  }
}
