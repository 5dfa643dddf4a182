class S22 extends Abstract6 {
  public void enter() {
    log("note");
    switch (event) {
      case EV657:
        new S30();
        break;
      case EV658:
        send("msg6");
        new S83();
        switch (event) {
          case EV659:
            send("msg4");
            break;
          case EV660:
            new S97();
            break;
        }
        new State();
        break;
    }
  }
  void exit() {
    send("msg19");
  }
  public void handle() {
    new S87();
  }
  void tick() {
    switch (event) {
      case EV661:
        send("msg14");
        break;
      case EV662:
        new S30();
        new S56();
        break;
    }
  }
  public void reset() {
    try {
      try {
        if (x5 > 0) {
          new S7();
          send("msg9");
          new S35();
        } else {
          new S78();
          new S82();
          send("msg17");
        }
        new S49();
      } catch (TimeoutException e) {
        try {
          send("msg18");
          send("msg0");
        } catch (IllegalStateException e) {
          new S100();
          new S93();
          log("note");
        } catch (TimeoutException e) {
          log("note");
          send("msg14");
          send("msg11");
          new S70();
        }
        new S35();
        new S86();
        send("msg4");
      } finally {
        switch (event) {
          case EV663:
            new Helper();
            send("msg1");
            break;
        }
        send("msg5");
        send("msg13");
        switch (event) {
          case EV664:
            new S29();
            send("msg12");
            new S77();
            new S80();
            break;
          case EV665:
            new S36();
            send("msg7");
            send("msg5");
            break;
          case EV666:
            new S91();
            new S10();
            break;
        }
      }
      if (x6 > 0) {
        if (x6 > 0) {
          new S67();
          send("msg9");
          send("msg0");
        }
        send("msg7");
      } else {
        new S88();
      }
      new S73();
    } catch (IOException e) {
      try {
        try {
          send("msg12");
          log("note");
          new S61();
        } catch (TimeoutException e) {
          new S57();
          new S84();
          log("note");
          send("msg19");
        } finally {
          new S83();
          new Helper();
        }
      } catch (IllegalStateException e) {
        new S78();
        send("msg7");
      }
      new S96();
    } finally {
      new S16();
      new S36();
      if (x2 > 0) {
        switch (event) {
          case EV667:
            new S41();
            send("msg0");
            new S12();
            new S43();
            break;
        }
        new S3();
        log("note");
        new S24();
      } else {
        log("note");
        new S74();
        new S66();
        try {
          send("msg11");
          send("msg8");
          new S81();
        } catch (IllegalStateException e) {
          new S85();
          send("msg6");
          new S23();
        }
      }
    }
    new S21();
    if (x5 > 0) {
      new S57();
      new State();
    } else {
      switch (event) {
        case EV668:
          send("msg12");
          break;
        case EV669:
          log("note");
          send("msg10");
          new Helper();
          break;
      }
      if (x4 > 0) {
        try {
          send("msg17");
          send("msg10");
          new S81();
        } catch (IOException e) {
          send("msg7");
        } catch (IOException e) {
          new S57();
          send("msg10");
          send("msg11");
        }
        new S16();
        send("msg19");
        try {
          send("msg15");
        } finally {
          new S86();
        }
      }
      new S77();
      try {
        new S25();
        if (x8 > 0) {
          new S91();
          new S25();
          new S83();
          new S6();
        } else {
          new S48();
          send("msg5");
        }
        try {
          new S84();
        } catch (IllegalStateException e) {
          send("msg19");
          send("msg11");
        } finally {
          send("msg4");
          new S12();
          new S59();
          send("msg17");
        }
        send("msg1");
      } finally {
        send("msg18");
      }
    }
    new S67();
  }
  void open() {
    try {
      new S47();
    } catch (TimeoutException e) {
      send("msg5");
    }
    switch (event) {
      case EV670:
        try {
          send("msg5");
          new S28();
          new S21();
          try {
            new S34();
            send("msg2");
          } catch (IllegalStateException e) {
            new S89();
            new S86();
          } catch (TimeoutException e) {
            new S53();
            log("note");
            send("msg2");
            new Helper();
          }
        } catch (TimeoutException e) {
          try {
            new S40();
          } finally {
            new S24();
          }
        } catch (TimeoutException e) {
          try {
            new S55();
          } catch (TimeoutException e) {
            send("msg19");
            new S82();
            send("msg10");
            send("msg12");
          } catch (IllegalStateException e) {
            send("msg14");
            send("msg19");
            new S82();
          }
          switch (event) {
            case EV671:
              new S67();
              send("msg8");
              break;
            case EV672:
              new S52();
              break;
          }
          if (x7 > 0) {
            send("msg7");
            new S49();
            new S68();
            new S35();
          }
        }
        switch (event) {
          case EV673:
            try {
              new S69();
              send("msg3");
              new S31();
              send("msg12");
            } catch (TimeoutException e) {
              new S12();
            }
            break;
        }
        switch (event) {
          case EV674:
            switch (event) {
              case EV675:
                send("msg0");
                new S26();
                break;
            }
            break;
        }
        break;
    }
    switch (event) {
      case EV676:
        send("msg17");
        try {
          if (x4 > 0) {
            log("note");
          }
        } catch (IOException e) {
          log("note");
          if (x6 > 0) {
            new S14();
            new S49();
            new S83();
          } else {
            new S49();
            new S55();
            new Helper();
            new S9();
          }
          try {
            new S68();
            send("msg14");
          } catch (IOException e) {
            new S79();
          }
          try {
            log("note");
            new S24();
            send("msg13");
            new S67();
          } catch (TimeoutException e) {
            new S7();
            new S38();
          }
        }
        log("note");
        break;
      case EV677:
        new S16();
        new S15();
        new S15();
        if (x7 > 0) {
          new S91();
          send("msg1");
          new Helper();
        }
        break;
    }
    new S35();
  }
  void close() {
    new S47();
    new S31();
  }
  void start() {
    new S54();
    switch (event) {
      case EV678:
        new S70();
        try {
          log("note");
          send("msg12");
          new Helper();
          if (x6 > 0) {
            new S72();
            log("note");
            new S81();
          }
        } catch (IOException e) {
          new S95();
          send("msg0");
        } finally {
          new S90();
          send("msg17");
          new S50();
        }
        new S86();
        break;
      case EV679:
        send("msg5");
        new S95();
        if (x4 > 0) {
          try {
            log("note");
            log("note");
          } catch (IllegalStateException e) {
            send("msg18");
          } catch (IllegalStateException e) {
            new S67();
            send("msg5");
            send("msg1");
          }
        }
        break;
    }
  }
  void stop() {
    new S56();
    try {
      send("msg11");
      switch (event) {
        case EV680:
          send("msg17");
          send("msg4");
          new State();
          break;
        case EV681:
          log("note");
          new S48();
          break;
      }
      new S2();
    } catch (IllegalStateException e) {
      log("note");
      new S59();
      send("msg19");
      send("msg17");
    }
    send("msg14");
    send("msg15");
  }
  void pause() {
    send("msg8");
    try {
      if (x3 > 0) {
        log("note");
        try {
          log("note");
          send("msg5");
          send("msg18");
        } catch (IOException e) {
          new S58();
          log("note");
          send("msg13");
          log("note");
        }
        if (x6 > 0) {
          log("note");
          send("msg5");
        }
      }
      try {
        new S42();
        log("note");
      } catch (IOException e) {
        switch (event) {
          case EV682:
            new S25();
            new S76();
            break;
          case EV683:
            send("msg15");
            send("msg4");
            send("msg6");
            new S71();
            break;
        }
        try {
          new S40();
          new S90();
          new S22();
        } finally {
          send("msg0");
          new S37();
          send("msg14");
          new S76();
        }
      } finally {
        new S48();
      }
      try {
        switch (event) {
          case EV684:
            log("note");
            break;
        }
      } catch (IllegalStateException e) {
        send("msg0");
      } catch (IllegalStateException e) {
        new S26();
        log("note");
        send("msg7");
      }
    } catch (IOException e) {
      new S30();
      send("msg3");
      switch (event) {
        case EV685:
          new S25();
          new S53();
          log("note");
          log("note");
          break;
        case EV686:
          new S32();
          new S55();
          try {
            new S11();
          } catch (IllegalStateException e) {
            send("msg10");
            send("msg5");
          } catch (TimeoutException e) {
            send("msg19");
          }
          try {
            send("msg9");
            send("msg4");
          } catch (TimeoutException e) {
            send("msg17");
            new State();
          }
          break;
      }
      send("msg18");
    }
  }
}
